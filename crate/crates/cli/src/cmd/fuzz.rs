use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use stdom::audits::{audit_ksub_named, describe, EdgeAuditor, SweepSummary, TheoremId};
use stdom::formats::report::{ReportRecord, Status};
use stdom::generate::random_graph;
use stdom::solver::SolverConfig;
use stdom::Graph;

use crate::exit::{Failure, Verdict};
use crate::io::{write_records, OutputArgs, SolverArgs};

/// Largest random graph order; k-subdivisions of denser graphs get slow.
pub const FUZZ_N_CAP: usize = 10;

const BATCH: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FuzzTheorem {
    EdgeDeletion,
    EdgeSubdivision,
    EdgeContraction,
    Corollary,
    Ksub,
}

impl FuzzTheorem {
    fn edge_id(self) -> Option<TheoremId> {
        match self {
            FuzzTheorem::EdgeDeletion => Some(TheoremId::EdgeDeletion),
            FuzzTheorem::EdgeSubdivision => Some(TheoremId::EdgeSubdivision),
            FuzzTheorem::EdgeContraction => Some(TheoremId::EdgeContraction),
            FuzzTheorem::Corollary => Some(TheoremId::Corollary),
            FuzzTheorem::Ksub => None,
        }
    }
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    #[arg(long, default_value_t = 4)]
    n_min: usize,

    #[arg(long, default_value_t = 8)]
    n_max: usize,

    /// Edge probability of the G(n, p) graphs.
    #[arg(long, default_value_t = 0.4)]
    p: f64,

    #[arg(long, default_value_t = 100)]
    count: usize,

    /// Required: every run must replay from its header.
    #[arg(long)]
    seed: u64,

    /// Theorems to audit; all of them by default.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [
        FuzzTheorem::EdgeDeletion,
        FuzzTheorem::EdgeSubdivision,
        FuzzTheorem::EdgeContraction,
        FuzzTheorem::Corollary,
        FuzzTheorem::Ksub,
    ])]
    theorems: Vec<FuzzTheorem>,

    /// Subdivision parameters used by `ksub`.
    #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
    k: Vec<usize>,

    #[command(flatten)]
    solver: SolverArgs,

    #[command(flatten)]
    output: OutputArgs,
}

impl FuzzArgs {
    fn validate(&self) -> Result<(), Failure> {
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Failure::input(format!(
                "invalid range {}..{}",
                self.n_min, self.n_max
            )));
        }
        if self.n_max > FUZZ_N_CAP {
            return Err(Failure::input(format!(
                "--n-max {} above the fuzz cap {FUZZ_N_CAP}",
                self.n_max
            )));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Failure::input(format!("--p {} outside [0, 1]", self.p)));
        }
        if let Some(k) = self.k.iter().find(|&&k| k < 2) {
            return Err(Failure::input(format!("--k {k} below 2")));
        }
        Ok(())
    }

    fn header(&self) -> ReportRecord {
        let names: Vec<String> = self
            .theorems
            .iter()
            .map(|t| {
                t.to_possible_value()
                    .expect("no skipped variants")
                    .get_name()
                    .to_string()
            })
            .collect();
        let ks: Vec<String> = self.k.iter().map(ToString::to_string).collect();
        let instance = format!(
            "fuzz seed={} n={}..{} p={} count={} theorems={} k={}",
            self.seed,
            self.n_min,
            self.n_max,
            self.p,
            self.count,
            names.join(","),
            ks.join(",")
        );
        ReportRecord::new("run-header", instance, Status::Info)
            .with("n_min", self.n_min)
            .with("n_max", self.n_max)
            .with("count", self.count)
    }
}

/// The `i`-th graph of a run: its order and edges both derive from `seed + i`.
fn instance(args: &FuzzArgs, i: usize) -> Result<(String, Graph), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed.wrapping_add(i as u64));
    let n = rng.random_range(args.n_min..=args.n_max);
    let g = random_graph(n, args.p, rng.random())?;
    Ok((format!("#{i} {}", describe(&g)), g))
}

fn audit(
    args: &FuzzArgs,
    label: &str,
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<Vec<ReportRecord>, Failure> {
    let edge_ids: Vec<TheoremId> = args.theorems.iter().filter_map(|t| t.edge_id()).collect();
    let mut out = Vec::new();
    if !edge_ids.is_empty() {
        let auditor = EdgeAuditor::new(g, cfg)?.named(label.to_string());
        for &e in g.edges() {
            out.extend(auditor.records(e, &edge_ids)?);
        }
    }
    if args.theorems.contains(&FuzzTheorem::Ksub) {
        for &k in &args.k {
            out.extend(
                audit_ksub_named(g, k, label, cfg)?
                    .iter()
                    .map(|a| a.to_record()),
            );
        }
    }
    Ok(out)
}

pub fn run(args: &FuzzArgs) -> Result<Verdict, Failure> {
    args.validate()?;
    let cfg = args.solver.config()?;
    let mut out = args.output.open()?;
    write_records(&mut *out, [&args.header()])?;

    let mut summary = SweepSummary::default();
    for start in (0..args.count).step_by(BATCH) {
        let end = (start + BATCH).min(args.count);
        let batch: Vec<Vec<ReportRecord>> = (start..end)
            .into_par_iter()
            .map(|i| {
                let (label, g) = instance(args, i)?;
                audit(args, &label, &g, &cfg)
            })
            .collect::<Result<_, Failure>>()?;
        let records: Vec<ReportRecord> = batch.into_iter().flatten().collect();
        for r in &records {
            summary.add(r);
        }
        write_records(&mut *out, &records)?;
    }

    let lines: Vec<ReportRecord> = summary
        .theorems
        .iter()
        .map(|(name, t)| {
            ReportRecord::new("summary", name.as_str(), Status::Info)
                .with("pass", t.pass)
                .with("fail", t.fail)
                .with("not_applicable", t.not_applicable)
                .with("tight_lower", t.tight_lower)
                .with("tight_upper", t.tight_upper)
        })
        .collect();
    write_records(&mut *out, &lines)?;
    eprint!("{summary}");
    Ok(Verdict::from_failures(summary.failures()))
}
