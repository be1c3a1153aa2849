use std::collections::HashSet;

use rayon::prelude::*;

use super::gamma_st;
use crate::error::{Error, Result};
use crate::formats::graph6;
use crate::formats::report::{ReportRecord, Status};
use crate::generate::{labeled_graphs, random_graph, ENUMERATION_CAP};
use crate::graph::{Edge, Graph};
use crate::iso::{canonical_form, canonical_pair, ISO_CAP};
use crate::solver::SolverConfig;
use crate::transforms::{delete_edge, subdivide_edge};

/// Seeded Erdős–Rényi graphs added to a search pool.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomBatch {
    pub n: usize,
    pub count: usize,
    pub p: f64,
    pub seed: u64,
}

/// The graphs a search looks at.
#[derive(Debug, Clone, Default)]
pub struct SearchPool {
    /// Every labeled graph on `2..=exhaustive_max_n` vertices (at most the
    /// enumeration cap), one per isomorphism class.
    pub exhaustive_max_n: usize,
    pub random: Option<RandomBatch>,
    /// Extra named graphs, searched as given.
    pub extra: Vec<Graph>,
}

impl SearchPool {
    pub fn exhaustive(max_n: usize) -> Self {
        SearchPool {
            exhaustive_max_n: max_n,
            ..SearchPool::default()
        }
    }

    pub fn with_random(mut self, batch: RandomBatch) -> Self {
        self.random = Some(batch);
        self
    }

    pub fn with_graph(mut self, g: Graph) -> Self {
        self.extra.push(g);
        self
    }

    fn graphs(&self) -> Result<Vec<Graph>> {
        if self.exhaustive_max_n > ENUMERATION_CAP {
            return Err(Error::Cap {
                what: format!("exhaustive search pool up to n={}", self.exhaustive_max_n),
                cap: ENUMERATION_CAP,
            });
        }
        let mut out = Vec::new();
        for n in 2..=self.exhaustive_max_n {
            let mut seen = HashSet::new();
            for g in labeled_graphs(n)? {
                if g.m() > 0 && seen.insert(canonical_form(&g)?.edges().to_vec()) {
                    out.push(g);
                }
            }
        }
        if let Some(b) = self.random {
            for i in 0..b.count as u64 {
                out.push(random_graph(b.n, b.p, b.seed.wrapping_add(i))?);
            }
        }
        out.extend(self.extra.iter().cloned());
        Ok(out)
    }
}

/// A graph and edge with `γ(G - e) = γ(G_e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualPair {
    pub graph: Graph,
    pub edge: Edge,
    pub gamma_g: usize,
    pub gamma: usize,
}

impl EqualPair {
    pub fn to_record(&self) -> ReportRecord {
        let mut r = ReportRecord::new(
            "equal-del-sub",
            format!("g6:{} e={}", graph6::write(&self.graph), self.edge),
            Status::Info,
        )
        .with("n", self.graph.n())
        .with("m", self.graph.m())
        .with("gamma_g", self.gamma_g)
        .with("gamma_minus_e", self.gamma)
        .with("gamma_sub_e", self.gamma);
        r.witness = vec![self.edge.u(), self.edge.v()];
        r
    }
}

fn equal_edges(g: &Graph, config: &SolverConfig) -> Result<Vec<EqualPair>> {
    let gamma_g = gamma_st(g, config)?.0 as usize;
    let mut out = Vec::new();
    for &e in g.edges() {
        let minus = gamma_st(&delete_edge(g, e)?, config)?.0;
        let sub = gamma_st(&subdivide_edge(g, e)?.graph, config)?.0;
        if minus == sub {
            out.push(EqualPair {
                graph: g.clone(),
                edge: e,
                gamma_g,
                gamma: minus as usize,
            });
        }
    }
    Ok(out)
}

/// Empirical search for edges whose deletion and subdivision give the same
/// strong domination number.
///
/// Hits on graphs small enough for canonical labelling are reported once per
/// isomorphism class of `(G, e)`, in canonical labelling; larger ones are
/// deduplicated by exact labelled equality. Output order follows the pool.
pub fn search_equal_deletion_subdivision(
    pool: &SearchPool,
    config: &SolverConfig,
) -> Result<Vec<EqualPair>> {
    let graphs = pool.graphs()?;
    let per_graph: Vec<Vec<EqualPair>> = graphs
        .par_iter()
        .map(|g| equal_edges(g, config))
        .collect::<Result<_>>()?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for hit in per_graph.into_iter().flatten() {
        let (graph, edge) = if hit.graph.n() <= ISO_CAP {
            canonical_pair(&hit.graph, hit.edge)?
        } else {
            (hit.graph.clone(), hit.edge)
        };
        if seen.insert((graph.n(), graph.edges().to_vec(), edge)) {
            out.push(EqualPair { graph, edge, ..hit });
        }
    }
    Ok(out)
}
