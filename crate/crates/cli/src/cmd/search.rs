use clap::{Args, Subcommand};
use stdom::audits::{search_equal_deletion_subdivision, RandomBatch, SearchPool};
use stdom::formats::report::{ReportRecord, Status};
use stdom::generate::ENUMERATION_CAP;

use crate::exit::{Failure, Verdict};
use crate::io::{write_records, OutputArgs, SolverArgs};

/// Largest order `equal-del-sub` accepts; the top order is sampled, not enumerated.
pub const SEARCH_N_CAP: usize = 7;

#[derive(Debug, Subcommand)]
pub enum SearchCommand {
    /// Graphs and edges with the same value after deleting and after subdividing the edge.
    EqualDelSub(EqualDelSubArgs),
}

#[derive(Debug, Args)]
pub struct EqualDelSubArgs {
    #[arg(long)]
    max_n: usize,

    /// Required; seeds the random batch used above the enumeration cap.
    #[arg(long)]
    seed: u64,

    /// Random graphs sampled at the top order.
    #[arg(long, default_value_t = 200)]
    count: usize,

    #[arg(long, default_value_t = 0.5)]
    p: f64,

    #[command(flatten)]
    solver: SolverArgs,

    #[command(flatten)]
    output: OutputArgs,
}

pub fn run(cmd: &SearchCommand) -> Result<Verdict, Failure> {
    match cmd {
        SearchCommand::EqualDelSub(a) => equal_del_sub(a),
    }
}

fn equal_del_sub(args: &EqualDelSubArgs) -> Result<Verdict, Failure> {
    if args.max_n > SEARCH_N_CAP {
        return Err(Failure::input(format!(
            "--max-n {} above {SEARCH_N_CAP}",
            args.max_n
        )));
    }
    if !(0.0..=1.0).contains(&args.p) {
        return Err(Failure::input(format!("--p {} outside [0, 1]", args.p)));
    }
    let cfg = args.solver.config()?;
    let mut pool = SearchPool::exhaustive(args.max_n.min(ENUMERATION_CAP));
    if args.max_n > ENUMERATION_CAP {
        pool = pool.with_random(RandomBatch {
            n: args.max_n,
            count: args.count,
            p: args.p,
            seed: args.seed,
        });
    }
    let header = ReportRecord::new(
        "run-header",
        format!(
            "search equal-del-sub max-n={} seed={} count={} p={}",
            args.max_n, args.seed, args.count, args.p
        ),
        Status::Info,
    )
    .with("max_n", args.max_n);
    let hits = search_equal_deletion_subdivision(&pool, &cfg)?;
    let mut records = vec![header];
    records.extend(hits.iter().map(|h| h.to_record()));
    write_records(&mut *args.output.open()?, &records)?;
    eprintln!("{} equality pairs", hits.len());
    Ok(Verdict::Ok)
}
