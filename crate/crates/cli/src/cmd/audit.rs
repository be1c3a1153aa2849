use clap::{Args, ValueEnum};
use stdom::audits::{
    audit_corona_deletion, audit_corona_subdivision, audit_fixture_tightness, audit_ksub_named,
    corona_edge_classes, ksub_not_applicable, CoronaEdgeClass, EdgeAuditor, TheoremId,
};
use stdom::families::{corona, FamilySpec};
use stdom::fixtures::FixtureId;
use stdom::formats::report::{ReportRecord, Status};
use stdom::solver::SolverConfig;
use stdom::{Edge, Graph};

use crate::exit::{Failure, Verdict};
use crate::io::{load_graph, write_records, FormatArg, OutputArgs, SolverArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    EdgeDeletion,
    EdgeSubdivision,
    EdgeContraction,
    Corollary,
    CoronaDeletion,
    CoronaSubdivision,
    Ksub,
    Fixtures,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(value_enum)]
    theorem: TheoremArg,

    /// Graph file or family spec; for corona theorems either `corona(G1,G2)`
    /// or the first factor together with `--second`.
    #[arg(long, short)]
    input: Option<String>,

    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    /// Second corona factor (file or family spec).
    #[arg(long)]
    second: Option<String>,

    /// Audit a single edge.
    #[arg(long, num_args = 2, value_names = ["U", "V"], conflicts_with = "all_edges")]
    edge: Option<Vec<usize>>,

    /// Audit every edge (the default when `--edge` is absent).
    #[arg(long)]
    all_edges: bool,

    /// Subdivision parameters for `ksub`, e.g. `--k 2,3,4`.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
    k: Vec<usize>,

    /// Restrict `fixtures` to one fixture id.
    #[arg(long)]
    fixture: Option<String>,

    #[command(flatten)]
    solver: SolverArgs,

    #[command(flatten)]
    output: OutputArgs,
}

impl AuditArgs {
    fn input(&self) -> Result<&str, Failure> {
        self.input
            .as_deref()
            .ok_or_else(|| Failure::input("this theorem needs --input"))
    }

    fn edge(&self) -> Result<Option<Edge>, Failure> {
        match self.edge.as_deref() {
            None => Ok(None),
            Some(&[u, v]) if u != v => Ok(Some(Edge::new(u, v))),
            Some(_) => Err(Failure::input("--edge needs two distinct vertices")),
        }
    }
}

pub fn run(args: &AuditArgs) -> Result<Verdict, Failure> {
    let cfg = args.solver.config()?;
    let records = match args.theorem {
        TheoremArg::EdgeDeletion => edge_records(args, TheoremId::EdgeDeletion, &cfg)?,
        TheoremArg::EdgeSubdivision => edge_records(args, TheoremId::EdgeSubdivision, &cfg)?,
        TheoremArg::EdgeContraction => edge_records(args, TheoremId::EdgeContraction, &cfg)?,
        TheoremArg::Corollary => edge_records(args, TheoremId::Corollary, &cfg)?,
        TheoremArg::CoronaDeletion => corona_records(args, true, &cfg)?,
        TheoremArg::CoronaSubdivision => corona_records(args, false, &cfg)?,
        TheoremArg::Ksub => ksub_records(args, &cfg)?,
        TheoremArg::Fixtures => fixture_records(args, &cfg)?,
    };
    write_records(&mut *args.output.open()?, &records)?;
    let failures = records.iter().filter(|r| r.status == Status::Fail).count();
    if failures > 0 {
        eprintln!("{failures} of {} audits failed", records.len());
    }
    Ok(Verdict::from_failures(failures))
}

fn edge_records(
    args: &AuditArgs,
    theorem: TheoremId,
    cfg: &SolverConfig,
) -> Result<Vec<ReportRecord>, Failure> {
    let loaded = load_graph(args.input()?, args.format)?;
    let g = &loaded.generated.graph;
    let edges = match args.edge()? {
        Some(e) => {
            if !g.contains_edge(e) {
                return Err(Failure::input(format!(
                    "{e} is not an edge of {}",
                    loaded.label
                )));
            }
            vec![e]
        }
        None => g.edges().to_vec(),
    };
    let auditor = EdgeAuditor::new(g, cfg)?.named(loaded.label.clone());
    let mut out = Vec::new();
    for e in edges {
        out.extend(auditor.records(e, &[theorem])?);
    }
    Ok(out)
}

fn corona_factors(args: &AuditArgs) -> Result<(String, Graph, Graph), Failure> {
    let input = args.input()?;
    if let (Ok(FamilySpec::Corona(a, b)), None) = (input.parse::<FamilySpec>(), &args.second) {
        return Ok((format!("corona({a},{b})"), a.graph()?, b.graph()?));
    }
    let second = args
        .second
        .as_deref()
        .ok_or_else(|| Failure::input("corona audits need --input corona(G1,G2) or --second"))?;
    let g1 = load_graph(input, args.format)?;
    let g2 = load_graph(second, args.format)?;
    Ok((
        format!("corona({},{})", g1.label, g2.label),
        g1.generated.graph,
        g2.generated.graph,
    ))
}

fn corona_records(
    args: &AuditArgs,
    deletion: bool,
    cfg: &SolverConfig,
) -> Result<Vec<ReportRecord>, Failure> {
    let (label, g1, g2) = corona_factors(args)?;
    let classes = match args.edge()? {
        Some(e) => {
            let (_, labels) = corona(&g1, &g2);
            let class = CoronaEdgeClass::classify(e, &labels)
                .filter(|c| c.resolve(&g1, &g2, &labels).is_ok())
                .ok_or_else(|| Failure::input(format!("{e} is not an edge of {label}")))?;
            vec![class]
        }
        None => corona_edge_classes(&g1, &g2),
    };
    let mut out = Vec::new();
    for class in classes {
        let mut audit = if deletion {
            audit_corona_deletion(&g1, &g2, class, cfg)?
        } else {
            audit_corona_subdivision(&g1, &g2, class, cfg)?
        };
        audit.instance = format!("{label} {class}");
        out.push(audit.to_record());
    }
    Ok(out)
}

fn ksub_records(args: &AuditArgs, cfg: &SolverConfig) -> Result<Vec<ReportRecord>, Failure> {
    let loaded = load_graph(args.input()?, args.format)?;
    let g = &loaded.generated.graph;
    let mut out = Vec::new();
    for &k in &args.k {
        let audits = audit_ksub_named(g, k, &loaded.label, cfg)?;
        if audits.is_empty() {
            let mut r = ksub_not_applicable(g, k);
            r.instance = format!("{} k={k}", loaded.label);
            out.push(r);
        }
        out.extend(audits.iter().map(|a| a.to_record()));
    }
    Ok(out)
}

fn fixture_records(args: &AuditArgs, cfg: &SolverConfig) -> Result<Vec<ReportRecord>, Failure> {
    let ids = match &args.fixture {
        Some(name) => vec![name.parse::<FixtureId>()?],
        None => FixtureId::ALL.to_vec(),
    };
    ids.into_iter()
        .map(|id| Ok(audit_fixture_tightness(id, cfg)?.to_record()))
        .collect()
}
