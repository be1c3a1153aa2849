//! `stdom`: solve, audit, fuzz, search and generate from the command line.
//!
//! Exit codes: 0 success, 1 an audit failed, 2 bad input or flags, 3 a cap or
//! node budget was hit.

mod cmd;
mod exit;
mod io;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use exit::{Failure, Verdict};

#[derive(Debug, Parser)]
#[command(
    name = "stdom",
    version,
    about = "Strong domination numbers and bound audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a domination number with a witness set.
    Solve(cmd::solve::SolveArgs),
    /// Audit one theorem on a graph, or on the bundled fixtures.
    Audit(cmd::audit::AuditArgs),
    /// Audit theorems on seeded random graphs.
    Fuzz(cmd::fuzz::FuzzArgs),
    /// Empirical searches.
    #[command(subcommand)]
    Search(cmd::search::SearchCommand),
    /// Write a generated graph to a file.
    Generate(cmd::generate::GenerateArgs),
}

fn run(cli: &Cli) -> Result<Verdict, Failure> {
    match &cli.command {
        Command::Solve(a) => cmd::solve::run(a),
        Command::Audit(a) => cmd::audit::run(a),
        Command::Fuzz(a) => cmd::fuzz::run(a),
        Command::Search(s) => cmd::search::run(s),
        Command::Generate(a) => cmd::generate::run(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => v.code(),
        Err(f) => {
            eprintln!("stdom: {f}");
            f.code()
        }
    }
}
