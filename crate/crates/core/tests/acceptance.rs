//! Acceptance suite: one line per criterion, non-zero exit if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stdom::audits::formulas::{gamma_path_cycle, ksub_pendant_upper, ksub_value};
use stdom::audits::{
    audit_all_edges, audit_corona_deletion, audit_corona_subdivision, audit_edge_contraction,
    audit_edge_deletion, audit_edge_subdivision, audit_fixture_tightness, audit_ksub,
    corona_baseline, corona_edge_classes, search_equal_deletion_subdivision, KSubKind, SearchPool,
    SweepSummary, TheoremId,
};
use stdom::families::{complete, complete_bipartite, cycle, path};
use stdom::fixtures::FixtureId;
use stdom::formats::report::{self, Quantity, ReportRecord, Status};
use stdom::formats::{edge_list, graph6};
use stdom::generate::{labeled_graphs, random_graph, random_tree};
use stdom::iso::is_isomorphic;
use stdom::solver::{gamma_bnb, gamma_oracle, gamma_tree_dp, solve, DominationMode, SolverConfig};
use stdom::transforms::k_subdivision;
use stdom::{Edge, Graph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn cfg() -> SolverConfig {
    SolverConfig::default()
}

fn strong(g: &Graph) -> usize {
    solve(g, DominationMode::Strong, &cfg())
        .expect("solve")
        .gamma
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed <= limit, || {
        format!("{what} took {elapsed:.2?}, limit {limit:?}")
    })
}

fn path_cycle_formula() -> Outcome {
    let start = Instant::now();
    for n in 1..=15 {
        let got = strong(&path(n).unwrap());
        let want = gamma_path_cycle(n).unwrap();
        ensure(got == want, || {
            format!("P{n}: solver {got}, formula {want}")
        })?;
    }
    for n in 3..=15 {
        let got = strong(&cycle(n).unwrap());
        let want = gamma_path_cycle(n).unwrap();
        ensure(got == want, || {
            format!("C{n}: solver {got}, formula {want}")
        })?;
    }
    within(
        start.elapsed(),
        Duration::from_secs(10),
        "path/cycle checks",
    )?;
    Ok(format!(
        "P1..P15 and C3..C15 match ceil(n/3) in {:.2?}",
        start.elapsed()
    ))
}

fn exhaustive_sweep() -> Outcome {
    let start = Instant::now();
    let mut graphs = Vec::new();
    for n in 1..=6 {
        for (i, g) in labeled_graphs(n).unwrap().enumerate() {
            graphs.push((format!("n{n}#{i}"), g));
        }
    }
    let records = audit_all_edges(&graphs, &TheoremId::EDGE, &cfg()).map_err(|e| e.to_string())?;
    let summary = SweepSummary::from_records(&records);
    let failures: Vec<&ReportRecord> = records
        .iter()
        .filter(|r| r.status == Status::Fail)
        .collect();
    if !failures.is_empty() {
        let mut pattern: BTreeMap<(String, i64, i64), usize> = BTreeMap::new();
        for r in &failures {
            let degree_sum = r.quantity("deg_u").unwrap_or(0) + r.quantity("deg_v").unwrap_or(0);
            let slack = r
                .quantity("slack_lower")
                .unwrap_or(0)
                .min(r.quantity("slack_upper").unwrap_or(0));
            *pattern
                .entry((r.theorem.clone(), degree_sum, slack))
                .or_default() += 1;
        }
        let mut msg = format!("{} failures over {} records", failures.len(), records.len());
        for (theorem, t) in &summary.theorems {
            msg.push_str(&format!(
                "\n        {theorem}: {} pass, {} fail, {} n/a",
                t.pass, t.fail, t.not_applicable
            ));
        }
        for ((theorem, degree_sum, slack), count) in pattern {
            msg.push_str(&format!(
                "\n        {count} x {theorem} with deg u + deg v = {degree_sum}, slack {slack}"
            ));
        }
        for r in failures.iter().take(3) {
            msg.push_str("\n        e.g. ");
            msg.push_str(&r.to_line());
        }
        return Err(msg);
    }
    for r in records.iter().filter(|r| r.status == Status::NotApplicable) {
        ensure(
            r.reason.as_deref() == Some("edge is a K2 component"),
            || format!("unexpected not-applicable: {}", r.to_line()),
        )?;
    }
    within(
        start.elapsed(),
        Duration::from_secs(300),
        "exhaustive sweep",
    )?;
    let na: usize = summary.theorems.values().map(|t| t.not_applicable).sum();
    Ok(format!(
        "{} graphs, {} records, 0 failures, {na} K2 not-applicable, {:.1?}",
        graphs.len(),
        records.len(),
        start.elapsed()
    ))
}

fn tightness_witnesses() -> Outcome {
    let e = Edge::new(0, 1);
    let c6 = audit_edge_subdivision(&cycle(6).unwrap(), e, &cfg()).unwrap();
    let c7s = audit_edge_subdivision(&cycle(7).unwrap(), e, &cfg()).unwrap();
    let c7c = audit_edge_contraction(&cycle(7).unwrap(), e, &cfg()).unwrap();
    let p6 = audit_edge_deletion(&path(6).unwrap(), e, &cfg()).unwrap();
    ensure(c6.pass() && c6.tight_upper(), || {
        format!("C6 subdivision: {:?}", c6.check)
    })?;
    ensure(c7s.pass() && c7s.tight_lower(), || {
        format!("C7 subdivision: {:?}", c7s.check)
    })?;
    let c = c7c.check.unwrap();
    ensure(
        c7c.pass() && c7c.tight_lower() && c.lower == 2 && c.middle == 2,
        || format!("C7 contraction: {c:?}"),
    )?;
    let d = p6.check.unwrap();
    ensure(
        p6.pass() && p6.tight_upper() && d.middle == 3 && d.upper == 3,
        || format!("P6 pendant deletion: {d:?}"),
    )?;
    // independent values for the four middles
    let c7 = cycle(7).unwrap();
    let refs = [
        (
            c6.check.unwrap().middle,
            common::brute_strong(&cycle(7).unwrap()),
        ),
        (
            c7s.check.unwrap().middle,
            common::brute_strong(&cycle(8).unwrap()),
        ),
        (
            c.middle,
            common::brute_strong(&stdom::transforms::contract_edge(&c7, e).unwrap().graph),
        ),
        (
            d.middle,
            common::brute_strong(&stdom::transforms::delete_edge(&path(6).unwrap(), e).unwrap()),
        ),
    ];
    for (got, want) in refs {
        ensure(got == want as i64, || {
            format!("reference oracle disagrees: {got} vs {want}")
        })?;
    }
    Ok("C6 sub 3=3 upper, C7 sub 3=3 lower, C7 contraction 2=2 lower, P6 pendant deletion 3=3 upper".into())
}

fn corona_theorems() -> Outcome {
    let g1s = [
        ("P2", path(2).unwrap()),
        ("P3", path(3).unwrap()),
        ("C3", cycle(3).unwrap()),
    ];
    let g2s = [
        ("K1", complete(1).unwrap()),
        ("P2", path(2).unwrap()),
        ("P3", path(3).unwrap()),
        ("K3", complete(3).unwrap()),
    ];
    let mut checked = 0;
    let mut deviations = Vec::new();
    for (n1, g1) in &g1s {
        for (n2, g2) in &g2s {
            let base = corona_baseline(g1, g2, &cfg()).unwrap();
            let (product, _) = stdom::families::corona(g1, g2);
            ensure(base.gamma == common::brute_strong(&product) as i64, || {
                format!("corona({n1},{n2}) baseline disagrees with reference oracle")
            })?;
            if !base.holds() {
                deviations.push(format!(
                    "corona({n1},{n2}) baseline: gamma {} != |V(G1)| {}",
                    base.gamma, base.n1
                ));
            }
            for class in corona_edge_classes(g1, g2) {
                for audit in [
                    audit_corona_deletion(g1, g2, class, &cfg()).unwrap(),
                    audit_corona_subdivision(g1, g2, class, &cfg()).unwrap(),
                ] {
                    checked += 1;
                    if !audit.pass() {
                        deviations.push(format!(
                            "{} corona({n1},{n2}) {class}: gamma {} -> {}, delta {}, predicted {}",
                            audit.theorem,
                            audit.quantity("gamma_g").unwrap(),
                            audit.check.unwrap().middle,
                            audit.quantity("delta").unwrap(),
                            audit.quantity("predicted_delta").unwrap(),
                        ));
                    }
                }
            }
        }
    }
    if deviations.is_empty() {
        return Ok(format!(
            "{checked} edge audits over 12 products, baselines all |V(G1)|"
        ));
    }
    let mut msg = format!(
        "{} of {checked} audits deviate (potential counterexamples):",
        deviations.len()
    );
    for d in &deviations {
        msg.push_str("\n        ");
        msg.push_str(d);
    }
    Err(msg)
}

fn ksub_exactness() -> Outcome {
    let k4 = complete(4).unwrap();
    let mut values = Vec::new();
    for k in 2..=5 {
        let start = Instant::now();
        let audits = audit_ksub(&k4, k, &cfg()).map_err(|e| e.to_string())?;
        let exact = audits
            .iter()
            .find(|a| a.kind == KSubKind::Exact)
            .ok_or("K4 not audited as exact")?;
        let want = ksub_value(4, 6, k).unwrap();
        ensure(exact.solved == want && exact.pass(), || {
            format!("K4^(1/{k}): solved {}, formula {want}", exact.solved)
        })?;
        within(
            start.elapsed(),
            Duration::from_secs(60),
            &format!("K4^(1/{k})"),
        )?;
        values.push(exact.solved);
    }
    ensure(values == [4, 4, 10, 10], || format!("values {values:?}"))?;
    Ok(format!("K4^(1/k), k=2..5: {values:?}"))
}

fn c5_example() -> Outcome {
    let c5 = cycle(5).unwrap();
    let at = |k: usize| strong(&k_subdivision(&c5, k).unwrap().0);
    let g2 = at(2);
    ensure(g2 == 4, || format!("C5^(1/2) gives {g2}"))?;
    ensure(g2 == common::brute_strong(&cycle(10).unwrap()), || {
        "reference oracle disagrees".into()
    })?;
    for r in 1..=2 {
        let v = at(3 * r);
        ensure(v == 5 * r, || {
            format!("C5^(1/{}) gives {v}, expected {}", 3 * r, 5 * r)
        })?;
    }
    let mut strict = Vec::new();
    for k in [4, 5] {
        let v = at(k);
        let bound = 5 * (1 + (k - 3).div_ceil(3));
        ensure(v < bound, || {
            format!("C5^(1/{k}) gives {v}, not below {bound}")
        })?;
        strict.push(format!("{v}<{bound}"));
    }
    Ok(format!(
        "C5^(1/2)=4<5, C5^(1/3)=5, C5^(1/6)=10, k=4,5: {}",
        strict.join(", ")
    ))
}

fn pendant_bound() -> Outcome {
    let p4 = path(4).unwrap();
    let mut parts = Vec::new();
    for k in 2..=6 {
        let a = audit_ksub(&p4, k, &cfg()).map_err(|e| e.to_string())?;
        let a = a
            .iter()
            .find(|a| a.kind == KSubKind::PendantUpper)
            .ok_or("P4 not audited with the pendant bound")?;
        let want = ksub_pendant_upper(4, 3, 2, k).unwrap();
        ensure(a.predicted == want, || {
            format!("k={k}: predicted {}", a.predicted)
        })?;
        ensure(a.solved <= want, || format!("k={k}: {} > {want}", a.solved))?;
        if k % 3 == 0 {
            ensure(a.solved == want, || {
                format!("k={k}: {} != {want}", a.solved)
            })?;
        }
        ensure(a.solved == (3 * k + 1).div_ceil(3), || {
            format!("k={k}: path formula disagrees")
        })?;
        parts.push(format!(
            "k={k} {}{}{want}",
            a.solved,
            if a.tight() { "=" } else { "<" }
        ));
    }
    Ok(parts.join(", "))
}

fn fixture_audits() -> Outcome {
    let mut parts = Vec::new();
    for id in FixtureId::ALL {
        let a = audit_fixture_tightness(id, &cfg()).map_err(|e| e.to_string())?;
        let c = a.check.ok_or_else(|| format!("{id} not applicable"))?;
        ensure(a.pass(), || format!("{id}: bound violated {c:?}"))?;
        let fx = stdom::fixtures::fixture(id);
        let bnb = gamma_bnb(&fx.graph, DominationMode::Strong, &cfg())
            .unwrap()
            .gamma as i64;
        ensure(bnb == a.quantity("gamma_g").unwrap(), || {
            format!("{id}: tree DP and bnb disagree")
        })?;
        if id == FixtureId::Fig2H {
            let g = a.quantity("gamma_g").unwrap();
            ensure(g - c.middle == 1 && a.tight_lower(), || {
                format!("fig2-H: gamma {g}, after deletion {}", c.middle)
            })?;
        }
        parts.push(format!(
            "{id} {}<={}<={} (slack {}/{})",
            c.lower,
            c.middle,
            c.upper,
            c.middle - c.lower,
            c.upper - c.middle
        ));
    }
    let fig1 = audit_fixture_tightness(FixtureId::Fig1G, &cfg()).unwrap();
    let finding = if fig1.tight_upper() {
        "fig1 upper bound attained"
    } else {
        "fig1 upper bound not attained (open finding)"
    };
    Ok(format!("{}; {finding}", parts.join(", ")))
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    let mut check = |g: &Graph, label: &str| -> Result<(), String> {
        for mode in DominationMode::ALL {
            let o = gamma_oracle(g, mode, &cfg()).unwrap().gamma;
            let b = gamma_bnb(g, mode, &cfg()).unwrap().gamma;
            ensure(o == b, || format!("{label} {mode}: oracle {o}, bnb {b}"))?;
            count += 1;
        }
        Ok(())
    };
    for n in 0..=5 {
        for g in labeled_graphs(n).unwrap() {
            check(&g, &graph6::write(&g))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let n = rng.random_range(1..=8);
        let p = rng.random_range(0.0..=1.0);
        let g = random_graph(n, p, i).unwrap();
        check(&g, &format!("random #{i}"))?;
    }
    let mut trees = 0;
    for i in 0..200 {
        let n = rng.random_range(1..=25);
        let t = random_tree(n, 1000 + i).unwrap();
        let d = gamma_tree_dp(&t, DominationMode::Strong).unwrap().gamma;
        let b = gamma_bnb(&t, DominationMode::Strong, &cfg()).unwrap().gamma;
        ensure(d == b, || {
            format!("tree #{i} ({}): dp {d}, bnb {b}", graph6::write(&t))
        })?;
        trees += 1;
    }
    Ok(format!(
        "{count} oracle/bnb comparisons, {trees} tree DP/bnb comparisons, 0 mismatches"
    ))
}

fn weak_strong_relation() -> Outcome {
    let mut connected = 0;
    for n in 3..=6 {
        for g in labeled_graphs(n).unwrap().filter(Graph::is_connected) {
            let w = gamma_bnb(&g, DominationMode::Weak, &cfg()).unwrap().gamma as i64;
            let s = gamma_bnb(&g, DominationMode::Strong, &cfg()).unwrap().gamma as i64;
            let lhs = Ratio::from_integer(w) + Ratio::new(3 * s, g.max_degree() as i64 + 1);
            ensure(lhs <= Ratio::from_integer(n as i64), || {
                format!(
                    "{}: {w} + 3*{s}/({}+1) > {n}",
                    graph6::write(&g),
                    g.max_degree()
                )
            })?;
            connected += 1;
        }
    }
    Ok(format!(
        "{connected} connected labeled graphs on 3..6 vertices"
    ))
}

fn equal_del_sub_search() -> Outcome {
    let hits = search_equal_deletion_subdivision(&SearchPool::exhaustive(5), &cfg())
        .map_err(|e| e.to_string())?;
    let has = |hits: &[stdom::audits::EqualPair], g: &Graph| {
        hits.iter().any(|h| is_isomorphic(&h.graph, g).unwrap())
    };
    ensure(has(&hits, &cycle(5).unwrap()), || "C5 missing".into())?;
    ensure(has(&hits, &complete_bipartite(2, 3).unwrap()), || {
        "K2,3 missing".into()
    })?;
    ensure(!has(&hits, &cycle(6).unwrap()), || "C6 present".into())?;
    let with_c6 = SearchPool::exhaustive(5).with_graph(cycle(6).unwrap());
    let hits6 = search_equal_deletion_subdivision(&with_c6, &cfg()).map_err(|e| e.to_string())?;
    ensure(!has(&hits6, &cycle(6).unwrap()), || {
        "C6 returned when added to the pool".into()
    })?;
    Ok(format!(
        "{} (G, e) classes; C5 and K2,3 found; C6 absent even when pooled",
        hits.len()
    ))
}

fn noncanonical_edge_list(g: &Graph, rng: &mut ChaCha8Rng) -> String {
    use rand::seq::SliceRandom;
    let mut lines: Vec<String> = g
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            if rng.random_bool(0.5) {
                format!("{v} {u}")
            } else {
                format!("{u} {v}")
            }
        })
        .collect();
    lines.shuffle(rng);
    let mut text = format!("{} {}\n", g.n(), g.m());
    for l in lines {
        text.push_str(&l);
        text.push('\n');
    }
    text
}

fn format_round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 0..=5 {
        graphs.extend(labeled_graphs(n).unwrap());
    }
    let exhaustive = graphs.len();
    for i in 0..1000 {
        let n = rng.random_range(1..=40);
        let p = rng.random_range(0.0..=1.0);
        graphs.push(random_graph(n, p, 7000 + i).unwrap());
    }
    for g in &graphs {
        let g6 = graph6::write(g);
        let back = graph6::parse(&g6).map_err(|e| format!("graph6 {g6}: {e}"))?;
        ensure(&back == g, || format!("graph6 round trip changed {g6}"))?;
        let el = edge_list::write(g);
        ensure(
            edge_list::parse(&el).map_err(|e| e.to_string())? == *g,
            || "edge list round trip".into(),
        )?;
        let messy = noncanonical_edge_list(g, &mut rng);
        let canon = edge_list::write(&edge_list::parse(&messy).map_err(|e| e.to_string())?);
        ensure(canon == el, || {
            format!("edge list canonicalisation of\n{messy}")
        })?;
    }
    let records: Vec<ReportRecord> = (0..1000).map(|i| random_record(i, &mut rng)).collect();
    let text = report::emit_to_string(&records);
    ensure(text.lines().count() == 1000, || "report line count".into())?;
    let back = report::load_str(&text).map_err(|e| e.to_string())?;
    ensure(back == records, || {
        "report round trip changed records".into()
    })?;
    Ok(format!(
        "graph6 and edge list: {exhaustive} exhaustive + 1000 random graphs; 1000 report records"
    ))
}

fn random_record(i: usize, rng: &mut ChaCha8Rng) -> ReportRecord {
    let status = [
        Status::Pass,
        Status::Fail,
        Status::NotApplicable,
        Status::Info,
    ][rng.random_range(0..4)];
    let mut r = ReportRecord::new(
        TheoremId::ALL[rng.random_range(0..TheoremId::ALL.len())].as_str(),
        format!("fuzz #{i} \"quoted\" \\ {}", rng.random::<u32>()),
        status,
    );
    let mut quantities = BTreeMap::new();
    for j in 0..rng.random_range(0..6) {
        let q = if rng.random_bool(0.5) {
            Quantity::from(rng.random_range(-1000i64..1000))
        } else {
            Quantity::ratio(Ratio::new(
                rng.random_range(-50i64..50),
                rng.random_range(1i64..20),
            ))
        };
        quantities.insert(format!("q{j}"), q);
    }
    r.quantities = quantities;
    if status == Status::NotApplicable {
        r.reason = Some("precondition".into());
    }
    r.tight_lower = rng.random_bool(0.3);
    r.tight_upper = rng.random_bool(0.3);
    if rng.random_bool(0.5) {
        r.method = Some("bnb".into());
    }
    r.witness = (0..rng.random_range(0..5))
        .map(|_| rng.random_range(0..100))
        .collect();
    r
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("path/cycle formula", path_cycle_formula),
        ("exhaustive theorem sweep n<=6", exhaustive_sweep),
        ("tightness witnesses", tightness_witnesses),
        ("corona theorems", corona_theorems),
        ("k-subdivision exactness (K4)", ksub_exactness),
        ("C5 example", c5_example),
        ("pendant bound (P4)", pendant_bound),
        ("fixture audits", fixture_audits),
        ("oracle equivalence", oracle_equivalence),
        ("weak/strong relation", weak_strong_relation),
        ("equal deletion and subdivision search", equal_del_sub_search),
        ("format round-trips", format_round_trips),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("acceptance {:>2} PASS {name} [{secs:.2}s]: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("acceptance {:>2} FAIL {name} [{secs:.2}s]: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
