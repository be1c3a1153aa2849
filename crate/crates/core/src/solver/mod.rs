//! Exact domination numbers.
//!
//! A set `D` dominates a graph in a given [`DominationMode`] when every vertex
//! `x` outside `D` has a neighbour `y` in `D` that is allowed to dominate it:
//!
//! | mode     | `y` may dominate `x` when |
//! |----------|---------------------------|
//! | strong   | `deg(x) <= deg(y)`        |
//! | weak     | `deg(x) >= deg(y)`        |
//! | plain    | always                    |
//!
//! Degrees are those of the whole graph and never change during a search, so
//! each mode is a fixed orientation of the edges. Three independent solvers
//! compute the minimum size of such a set:
//!
//! * [`gamma_oracle`] tries every subset in order of size (small graphs only);
//! * [`gamma_bnb`] is an iterative-deepening branch and bound, run per
//!   connected component;
//! * [`gamma_tree_dp`] is a linear-time dynamic program for forests.
//!
//! [`solve`] picks the tree DP for forests and branch and bound otherwise.

mod bnb;
mod oracle;
mod tree_dp;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub use bnb::gamma_bnb;
pub use oracle::gamma_oracle;
pub use tree_dp::gamma_tree_dp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominationMode {
    Strong,
    Weak,
    Plain,
}

impl DominationMode {
    pub const ALL: [DominationMode; 3] = [
        DominationMode::Strong,
        DominationMode::Weak,
        DominationMode::Plain,
    ];

    /// Whether `y` may dominate its neighbour `x`. Adjacency is not checked.
    #[inline]
    pub fn permits(self, g: &Graph, x: Vertex, y: Vertex) -> bool {
        match self {
            DominationMode::Strong => g.degree(x) <= g.degree(y),
            DominationMode::Weak => g.degree(x) >= g.degree(y),
            DominationMode::Plain => true,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DominationMode::Strong => "strong",
            DominationMode::Weak => "weak",
            DominationMode::Plain => "plain",
        }
    }
}

impl fmt::Display for DominationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DominationMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DominationMode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Lookup {
                kind: "domination mode",
                id: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest graph the exhaustive oracle accepts.
    pub oracle_cap: usize,
    /// Search nodes branch and bound may expand before giving up.
    pub node_budget: u64,
}

impl SolverConfig {
    pub const DEFAULT_ORACLE_CAP: usize = 12;
    pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

    pub fn with_node_budget(self, node_budget: u64) -> Self {
        SolverConfig {
            node_budget,
            ..self
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.oracle_cap == 0 || self.node_budget == 0 {
            return Err(Error::validation("solver caps must be positive"));
        }
        if self.oracle_cap > oracle::HARD_CAP {
            return Err(Error::validation(format!(
                "oracle cap {} exceeds the supported maximum {}",
                self.oracle_cap,
                oracle::HARD_CAP
            )));
        }
        Ok(())
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            oracle_cap: Self::DEFAULT_ORACLE_CAP,
            node_budget: Self::DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Oracle,
    Bnb,
    TreeDp,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Bnb => "bnb",
            Method::TreeDp => "tree-dp",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Subsets tested (oracle), search nodes (bnb) or vertices visited (tree DP).
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub gamma: usize,
    pub witness: VertexSet,
    pub mode: DominationMode,
    pub method: Method,
    pub stats: SolveStats,
}

/// Checks the definition directly.
///
/// ```
/// use stdom::{families, solver::{verify, DominationMode}, VertexSet};
/// let p3 = families::path(3).unwrap();
/// let centre = VertexSet::from_members(3, [1]).unwrap();
/// let leaf = VertexSet::from_members(3, [0]).unwrap();
/// assert!(verify(&p3, &centre, DominationMode::Strong).unwrap());
/// assert!(!verify(&p3, &leaf, DominationMode::Strong).unwrap());
/// ```
pub fn verify(g: &Graph, d: &VertexSet, mode: DominationMode) -> Result<bool> {
    if let Some(x) = d.iter().find(|&x| x >= g.n()) {
        return Err(Error::validation(format!(
            "vertex {x} of the candidate set is not in the graph"
        )));
    }
    Ok(g.vertices().filter(|&x| !d.contains(x)).all(|x| {
        g.neighbors(x)
            .iter()
            .any(|&y| d.contains(y) && mode.permits(g, x, y))
    }))
}

/// Exact solve with the method suited to the graph.
pub fn solve(g: &Graph, mode: DominationMode, config: &SolverConfig) -> Result<SolveResult> {
    if g.is_forest() {
        gamma_tree_dp(g, mode)
    } else {
        gamma_bnb(g, mode, config)
    }
}

/// `⌈n_c / (Δ_c + 1)⌉` summed over connected components; an isolated vertex
/// contributes 1.
pub fn degree_lower_bound(g: &Graph) -> usize {
    g.components()
        .iter()
        .map(|c| {
            let max_deg = c.iter().map(|&x| g.degree(x)).max().unwrap_or(0);
            c.len().div_ceil(max_deg + 1)
        })
        .sum()
}
