//! Edge deletion, edge subdivision, edge contraction and k-subdivision.
//!
//! Every operation returns a fresh [`Graph`] plus enough provenance to find
//! the named vertices of the source graph in the result:
//!
//! * deletion keeps every id;
//! * subdivision appends the new vertex as id `n`;
//! * contraction merges `u` and `v` into `min(u, v)` and shifts every id above
//!   `max(u, v)` down by one;
//! * k-subdivision keeps the original ids and appends the internal vertices
//!   superedge by superedge.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// `G - e`.
///
/// ```
/// use stdom::{families, transforms, Edge};
/// let p7 = transforms::delete_edge(&families::cycle(7).unwrap(), Edge::new(6, 0)).unwrap();
/// assert!(p7.is_tree());
/// ```
pub fn delete_edge(g: &Graph, e: Edge) -> Result<Graph> {
    g.require_edge(e)?;
    Graph::new(g.n(), g.edges().iter().copied().filter(|&f| f != e))
}

#[derive(Debug, Clone)]
pub struct Subdivision {
    pub graph: Graph,
    /// The vertex placed on the subdivided edge; always the last id.
    pub new_vertex: Vertex,
}

/// `G_e`: replace `uv` by the path `u - v_e - v`.
pub fn subdivide_edge(g: &Graph, e: Edge) -> Result<Subdivision> {
    g.require_edge(e)?;
    let w = g.n();
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&f| f != e)
        .chain([Edge::new(e.u(), w), Edge::new(w, e.v())]);
    Ok(Subdivision {
        graph: Graph::new(g.n() + 1, edges)?,
        new_vertex: w,
    })
}

#[derive(Debug, Clone)]
pub struct ContractionResult {
    pub graph: Graph,
    /// The vertex `w` that replaced both endpoints.
    pub merged: Vertex,
    /// `map[x]` is the id of old vertex `x` in the contracted graph.
    pub map: Vec<Vertex>,
}

/// `G/e` as a simple graph: parallel edges are coalesced and the loop dropped.
pub fn contract_edge(g: &Graph, e: Edge) -> Result<ContractionResult> {
    g.require_edge(e)?;
    let (keep, gone) = e.endpoints();
    let map: Vec<Vertex> = g
        .vertices()
        .map(|x| match x.cmp(&gone) {
            std::cmp::Ordering::Less => x,
            std::cmp::Ordering::Equal => keep,
            std::cmp::Ordering::Greater => x - 1,
        })
        .collect();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .map(|f| Edge::new(map[f.u()], map[f.v()]))
        .filter(|f| !f.is_loop())
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(ContractionResult {
        graph: Graph::new(g.n() - 1, edges)?,
        merged: keep,
        map,
    })
}

/// One superedge of a k-subdivision: the original edge and its internal
/// vertices ordered by distance from the smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Superedge {
    pub edge: Edge,
    pub internal: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionLabeling {
    pub k: usize,
    /// `original[x]` is the id of original vertex `x`; the identity map.
    pub original: Vec<Vertex>,
    /// In the order of `G.edges()`.
    pub superedges: Vec<Superedge>,
}

impl SubdivisionLabeling {
    /// The internal vertex at distance `l` (1-based) from `edge.u()`.
    pub fn internal(&self, edge: Edge, l: usize) -> Option<Vertex> {
        let s = self.superedges.iter().find(|s| s.edge == edge)?;
        s.internal.get(l.checked_sub(1)?).copied()
    }
}

/// `G^{1/k}`: every edge becomes a path of length `k`. The result has
/// `n + (k-1)m` vertices and `km` edges, and `k = 1` returns `G` unchanged.
///
/// ```
/// use stdom::{families, transforms};
/// let (g, _) = transforms::k_subdivision(&families::complete(4).unwrap(), 2).unwrap();
/// assert_eq!((g.n(), g.m()), (10, 12));
/// ```
pub fn k_subdivision(g: &Graph, k: usize) -> Result<(Graph, SubdivisionLabeling)> {
    if k == 0 {
        return Err(Error::validation("k-subdivision needs k >= 1"));
    }
    let mut next = g.n();
    let mut edges = Vec::with_capacity(k * g.m());
    let mut superedges = Vec::with_capacity(g.m());
    for &e in g.edges() {
        let internal: Vec<Vertex> = (next..next + k - 1).collect();
        next += k - 1;
        let chain: Vec<Vertex> = std::iter::once(e.u())
            .chain(internal.iter().copied())
            .chain(std::iter::once(e.v()))
            .collect();
        edges.extend(chain.windows(2).map(|w| Edge::new(w[0], w[1])));
        superedges.push(Superedge { edge: e, internal });
    }
    let labels = SubdivisionLabeling {
        k,
        original: g.vertices().collect(),
        superedges,
    };
    Ok((Graph::new(next, edges)?, labels))
}
