use std::fs::{self, File};
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use stdom::families::{FamilySpec, Generated};
use stdom::formats::report::{self, ReportRecord};
use stdom::formats::GraphFormat;
use stdom::solver::SolverConfig;

use crate::exit::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    El,
    G6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::El => GraphFormat::EdgeList,
            FormatArg::G6 => GraphFormat::Graph6,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Graph file (`-` for stdin) or a family spec such as `C6`, `K2,3`,
    /// `corona(C3,K1)` or `fig2-H` when no such file exists.
    #[arg(long, short)]
    pub input: String,

    /// Input format; defaults to graph6 for `.g6` files and edge list otherwise.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
}

/// A loaded graph with a label for report instance fields.
pub struct Loaded {
    pub label: String,
    pub generated: Generated,
}

impl InputArgs {
    pub fn load(&self) -> Result<Loaded, Failure> {
        load_graph(&self.input, self.format)
    }
}

pub fn load_graph(input: &str, format: Option<FormatArg>) -> Result<Loaded, Failure> {
    let read_as = |text: String, path: &Path| -> Result<Loaded, Failure> {
        let fmt = format.map_or_else(|| GraphFormat::from_path(path), GraphFormat::from);
        let graph = fmt.parse(&text)?;
        Ok(Loaded {
            label: input.to_string(),
            generated: Generated {
                graph,
                corona: None,
            },
        })
    };
    if input == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return read_as(text, Path::new("-"));
    }
    let path = Path::new(input);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{input}: {e}")))?;
        return read_as(text, path);
    }
    let spec: FamilySpec = input
        .parse()
        .map_err(|_| Failure::input(format!("{input}: no such file, and not a family spec")))?;
    Ok(Loaded {
        label: spec.to_string(),
        generated: spec.generate()?,
    })
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Largest graph handed to the exhaustive oracle.
    #[arg(long, env = "STDOM_ORACLE_CAP", default_value_t = SolverConfig::DEFAULT_ORACLE_CAP)]
    pub oracle_cap: usize,

    /// Branch-and-bound nodes per solve before giving up with bounds.
    #[arg(long, env = "STDOM_NODE_BUDGET", default_value_t = SolverConfig::DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,
}

impl SolverArgs {
    pub fn config(&self) -> Result<SolverConfig, Failure> {
        let cfg = SolverConfig {
            oracle_cap: self.oracle_cap,
            node_budget: self.node_budget,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

impl OutputArgs {
    pub fn open(&self) -> Result<Box<dyn Write>, Failure> {
        Ok(match &self.output {
            Some(p) => Box::new(BufWriter::new(
                File::create(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
            )),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        })
    }
}

/// Writes records as JSON lines and flushes, so long runs are observable.
pub fn write_records<'a>(
    out: &mut dyn Write,
    records: impl IntoIterator<Item = &'a ReportRecord>,
) -> Result<(), Failure> {
    report::emit(records, &mut *out)?;
    out.flush()?;
    Ok(())
}
