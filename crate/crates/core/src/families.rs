//! Named graph families and the corona product.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures::{self, FixtureId};
use crate::graph::{Edge, Graph, Vertex};

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::validation("path needs at least one vertex"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::validation(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::validation(
            "complete graph needs at least one vertex",
        ));
    }
    Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::validation(
            "complete bipartite sides must be nonempty",
        ));
    }
    Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves == 0 {
        return Err(Error::validation("star needs at least one leaf"));
    }
    Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

/// Where the pieces of `G1 ∘ G2` ended up.
///
/// Vertex `i` of `G1` keeps id `i` (the hub of copy `i`); vertex `j` of the
/// `i`-th copy of `G2` is `n1 + i * n2 + j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaLabeling {
    pub n1: usize,
    pub n2: usize,
}

impl CoronaLabeling {
    pub fn hub(&self, i: usize) -> Vertex {
        assert!(i < self.n1);
        i
    }

    pub fn hubs(&self) -> std::ops::Range<Vertex> {
        0..self.n1
    }

    pub fn copy_vertex(&self, i: usize, j: usize) -> Vertex {
        assert!(i < self.n1 && j < self.n2);
        self.n1 + i * self.n2 + j
    }

    pub fn copy(&self, i: usize) -> std::ops::Range<Vertex> {
        let start = self.n1 + i * self.n2;
        start..start + self.n2
    }

    pub fn total(&self) -> usize {
        self.n1 + self.n1 * self.n2
    }
}

/// The corona product `G1 ∘ G2`: one copy of `G1`, `|V(G1)|` copies of `G2`,
/// and the `i`-th vertex of `G1` joined to every vertex of the `i`-th copy.
///
/// ```
/// use stdom::families::{corona, path};
/// let (g, _) = corona(&path(2).unwrap(), &path(3).unwrap());
/// assert_eq!((g.n(), g.m()), (8, 11));
/// ```
pub fn corona(g1: &Graph, g2: &Graph) -> (Graph, CoronaLabeling) {
    let labels = CoronaLabeling {
        n1: g1.n(),
        n2: g2.n(),
    };
    let mut edges: Vec<Edge> = g1.edges().to_vec();
    for i in 0..g1.n() {
        for e in g2.edges() {
            edges.push(Edge::new(
                labels.copy_vertex(i, e.u()),
                labels.copy_vertex(i, e.v()),
            ));
        }
        for j in 0..g2.n() {
            edges.push(Edge::new(i, labels.copy_vertex(i, j)));
        }
    }
    let g = Graph::new(labels.total(), edges).expect("corona of simple graphs is simple");
    (g, labels)
}

/// A graph family with its parameters.
///
/// The textual form is the usual shorthand: `P5`, `C6`, `K4`, `K2,3`, `S4`
/// (the star `K_{1,4}`), `corona(C3,K1)`, or a fixture id such as `fig2-H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Corona(Box<FamilySpec>, Box<FamilySpec>),
    Fixture(FixtureId),
}

/// A generated graph plus its corona provenance when there is one.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub corona: Option<CoronaLabeling>,
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Generated> {
        let graph = match self {
            FamilySpec::Path(n) => path(*n)?,
            FamilySpec::Cycle(n) => cycle(*n)?,
            FamilySpec::Complete(n) => complete(*n)?,
            FamilySpec::CompleteBipartite(a, b) => complete_bipartite(*a, *b)?,
            FamilySpec::Star(n) => star(*n)?,
            FamilySpec::Fixture(id) => fixtures::fixture(*id).graph,
            FamilySpec::Corona(a, b) => {
                let (g, labels) = corona(&a.graph()?, &b.graph()?);
                return Ok(Generated {
                    graph: g,
                    corona: Some(labels),
                });
            }
        };
        Ok(Generated {
            graph,
            corona: None,
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        self.generate().map(|g| g.graph)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            FamilySpec::Star(n) => write!(f, "S{n}"),
            FamilySpec::Corona(a, b) => write!(f, "corona({a},{b})"),
            FamilySpec::Fixture(id) => write!(f, "{id}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Lookup {
            kind: "graph family",
            id: s.to_string(),
        };
        if let Ok(id) = s.parse::<FixtureId>() {
            return Ok(FamilySpec::Fixture(id));
        }
        if let Some(inner) = s.strip_prefix("corona(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = split_top_level(inner).ok_or_else(bad)?;
            return Ok(FamilySpec::Corona(
                Box::new(a.parse()?),
                Box::new(b.parse()?),
            ));
        }
        let (head, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match head {
            "P" => Ok(FamilySpec::Path(num(rest)?)),
            "C" => Ok(FamilySpec::Cycle(num(rest)?)),
            "S" => Ok(FamilySpec::Star(num(rest)?)),
            "K" => match rest.split_once(',') {
                Some((a, b)) => Ok(FamilySpec::CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(FamilySpec::Complete(num(rest)?)),
            },
            _ => Err(bad()),
        }
    }
}

// Splits "A,B" at the comma that is not nested in parentheses and not part of
// a `Ka,b` token.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                let (a, b) = (&s[..i], &s[i + 1..]);
                if a.parse::<FamilySpec>().is_ok() && b.parse::<FamilySpec>().is_ok() {
                    return Some((a, b));
                }
            }
            _ => {}
        }
    }
    None
}
