use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::json;
use stdom::families::{self, FamilySpec};
use stdom::fixtures::fixture_by_name;
use stdom::formats::GraphFormat;
use stdom::transforms::k_subdivision;
use stdom::Graph;

use crate::exit::{Failure, Verdict};
use crate::io::{load_graph, FormatArg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Corona,
    Ksub,
    Fixture,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,

    /// Family parameters: sizes, or graph specs/files for `corona` and `ksub`.
    #[arg(long, num_args = 1..)]
    args: Vec<String>,

    /// Subdivision parameter for `ksub`.
    #[arg(long)]
    k: Option<usize>,

    /// Output file; stdout when absent. A `<file>.provenance.json` sidecar is
    /// written next to it for corona, ksub and fixture graphs.
    #[arg(long, short)]
    output: Option<PathBuf>,

    /// Defaults to graph6 for `.g6` outputs and edge list otherwise.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

fn sizes<const N: usize>(args: &[String]) -> Result<[usize; N], Failure> {
    let parsed: Vec<usize> = args
        .iter()
        .map(|a| {
            a.parse()
                .map_err(|_| Failure::input(format!("expected a size, got {a:?}")))
        })
        .collect::<Result<_, _>>()?;
    parsed
        .try_into()
        .map_err(|_| Failure::input(format!("expected {N} size argument(s), got {}", args.len())))
}

fn one(args: &[String]) -> Result<&str, Failure> {
    match args {
        [a] => Ok(a),
        _ => Err(Failure::input(format!(
            "expected 1 argument, got {}",
            args.len()
        ))),
    }
}

fn build(a: &GenerateArgs) -> Result<(Graph, Option<serde_json::Value>), Failure> {
    let plain = |g: stdom::Result<Graph>| Ok((g?, None));
    match a.family {
        Family::Path => plain(families::path(sizes::<1>(&a.args)?[0])),
        Family::Cycle => plain(families::cycle(sizes::<1>(&a.args)?[0])),
        Family::Complete => plain(families::complete(sizes::<1>(&a.args)?[0])),
        Family::CompleteBipartite => {
            let [x, y] = sizes::<2>(&a.args)?;
            plain(families::complete_bipartite(x, y))
        }
        Family::Star => plain(families::star(sizes::<1>(&a.args)?[0])),
        Family::Corona => {
            let [g1, g2] = a.args.as_slice() else {
                return Err(Failure::input("corona takes two graphs"));
            };
            let (g1, g2) = (load_graph(g1, None)?, load_graph(g2, None)?);
            let (g, labels) = families::corona(&g1.generated.graph, &g2.generated.graph);
            let spec = format!("corona({},{})", g1.label, g2.label);
            Ok((g, Some(json!({ "family": spec, "corona": labels }))))
        }
        Family::Ksub => {
            let k = a.k.ok_or_else(|| Failure::input("ksub needs --k"))?;
            let base = load_graph(one(&a.args)?, None)?;
            let (g, labels) = k_subdivision(&base.generated.graph, k)?;
            Ok((
                g,
                Some(
                    json!({ "family": format!("ksub({})", base.label), "k": k, "subdivision": labels }),
                ),
            ))
        }
        Family::Fixture => {
            let f = fixture_by_name(one(&a.args)?)?;
            let names: serde_json::Map<String, serde_json::Value> = f
                .names
                .iter()
                .map(|&(n, v)| (n.to_string(), json!(v)))
                .collect();
            let spec = FamilySpec::Fixture(f.id).to_string();
            Ok((
                f.graph,
                Some(json!({ "family": spec, "edge": f.edge, "names": names })),
            ))
        }
    }
}

pub fn run(a: &GenerateArgs) -> Result<Verdict, Failure> {
    if a.k.is_some() && a.family != Family::Ksub {
        return Err(Failure::input("--k only applies to ksub"));
    }
    let (g, provenance) = build(a)?;
    let fmt = match (a.format, &a.output) {
        (Some(f), _) => GraphFormat::from(f),
        (None, Some(p)) => GraphFormat::from_path(p),
        (None, None) => GraphFormat::EdgeList,
    };
    let text = fmt.write(&g);
    match &a.output {
        None => print!("{text}"),
        Some(path) => {
            let io_err = |p: &std::path::Path, e: std::io::Error| {
                Failure::input(format!("{}: {e}", p.display()))
            };
            fs::write(path, &text).map_err(|e| io_err(path, e))?;
            if let Some(p) = provenance {
                let mut side = path.clone().into_os_string();
                side.push(".provenance.json");
                let side = PathBuf::from(side);
                let body = serde_json::to_string_pretty(&p).expect("provenance serializes");
                fs::write(&side, body + "\n").map_err(|e| io_err(&side, e))?;
            }
        }
    }
    eprintln!("{} vertices, {} edges", g.n(), g.m());
    Ok(Verdict::Ok)
}
