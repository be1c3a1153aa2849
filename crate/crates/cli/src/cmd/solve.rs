use clap::{Args, ValueEnum};
use stdom::formats::report::{ReportRecord, Status};
use stdom::solver::{gamma_bnb, gamma_oracle, gamma_tree_dp, solve, DominationMode};

use crate::exit::{Failure, Verdict};
use crate::io::{write_records, InputArgs, OutputArgs, SolverArgs};

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Strong,
    Weak,
    Plain,
}

impl From<ModeArg> for DominationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Strong => DominationMode::Strong,
            ModeArg::Weak => DominationMode::Weak,
            ModeArg::Plain => DominationMode::Plain,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MethodArg {
    Auto,
    Oracle,
    Bnb,
    TreeDp,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    input: InputArgs,

    #[arg(long, value_enum, default_value = "strong")]
    mode: ModeArg,

    #[arg(long, value_enum, default_value = "auto")]
    method: MethodArg,

    #[command(flatten)]
    solver: SolverArgs,

    #[command(flatten)]
    output: OutputArgs,
}

pub fn run(args: &SolveArgs) -> Result<Verdict, Failure> {
    let loaded = args.input.load()?;
    let g = &loaded.generated.graph;
    let cfg = args.solver.config()?;
    let mode = DominationMode::from(args.mode);
    let r = match args.method {
        MethodArg::Auto => solve(g, mode, &cfg)?,
        MethodArg::Oracle => gamma_oracle(g, mode, &cfg)?,
        MethodArg::Bnb => gamma_bnb(g, mode, &cfg)?,
        MethodArg::TreeDp => gamma_tree_dp(g, mode)?,
    };
    let mut record = ReportRecord::new("solve", &loaded.label, Status::Info)
        .with("n", g.n())
        .with("m", g.m())
        .with("gamma", r.gamma)
        .with("nodes", i64::try_from(r.stats.nodes).unwrap_or(i64::MAX));
    record.method = Some(r.method.as_str().to_string());
    record.witness = r.witness.to_vec();
    eprintln!(
        "{} gamma = {} ({}, {:.2?})",
        mode, r.gamma, r.method, r.stats.elapsed
    );
    write_records(&mut *args.output.open()?, [&record])?;
    Ok(Verdict::Ok)
}
