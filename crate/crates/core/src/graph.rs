//! Simple undirected graphs on dense vertex ids `0..n`.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An unordered pair of vertices. `Edge::new(3, 1)` and `Edge::new(1, 3)`
/// compare equal; the smaller endpoint is always stored first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    /// The smaller endpoint.
    pub fn u(&self) -> Vertex {
        self.u
    }

    /// The larger endpoint.
    pub fn v(&self) -> Vertex {
        self.v
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(&self, x: Vertex) -> Option<Vertex> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from((a, b): (Vertex, Vertex)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Immutable simple graph.
///
/// Every constructor validates that there are no loops, no parallel edges and
/// no endpoint outside `0..n`. Neighbour lists are sorted, and adjacency is a
/// bit-matrix lookup.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    ///
    /// ```
    /// use stdom::{Edge, Graph};
    /// let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    /// assert_eq!(p3.degree(1), 2);
    /// assert!(Graph::new(2, [(0, 0)]).is_err());
    /// assert!(Graph::new(4, [Edge::new(0, 1), Edge::new(1, 0)]).is_err());
    /// ```
    pub fn new<E: Into<Edge>>(n: usize, edges: impl IntoIterator<Item = E>) -> Result<Self> {
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        let mut list = Vec::new();
        for e in edges {
            let e = e.into();
            if e.is_loop() {
                return Err(Error::validation(format!("loop edge at vertex {}", e.u)));
            }
            if e.v >= n {
                return Err(Error::validation(format!(
                    "edge {e} has an endpoint outside 0..{n}"
                )));
            }
            if rows[e.u].contains(e.v) {
                return Err(Error::validation(format!("duplicate edge {e}")));
            }
            rows[e.u].insert(e.v);
            rows[e.v].insert(e.u);
            list.push(e);
        }
        list.sort_unstable();
        let adj = rows.iter().map(|r| r.ones().collect()).collect();
        Ok(Graph {
            n,
            edges: list,
            adj,
            rows,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph::new::<Edge>(n, []).expect("edgeless graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn neighbors(&self, x: Vertex) -> &[Vertex] {
        &self.adj[x]
    }

    pub fn degree(&self, x: Vertex) -> usize {
        self.adj[x].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && b < self.n && self.rows[a].contains(b)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u, e.v)
    }

    pub(crate) fn require_edge(&self, e: Edge) -> Result<()> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::validation(format!(
                "{e} is not an edge of the graph"
            )))
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Connected components, each sorted ascending, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Acyclic, possibly disconnected.
    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.is_connected() && self.m() + 1 == self.n
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &x) in vertices.iter().enumerate() {
            index[x] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| Edge::new(index[e.u], index[e.v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// `self` followed by `other`, with `other`'s ids shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self.edges.iter().copied().chain(
            other
                .edges
                .iter()
                .map(|e| Edge::new(e.u + shift, e.v + shift)),
        );
        Graph::new(self.n + other.n, edges).expect("disjoint union of simple graphs is simple")
    }

    /// Relabels vertex `x` as `perm[x]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let edges = self.edges.iter().map(|e| Edge::new(perm[e.u], perm[e.v]));
        Graph::new(self.n, edges).expect("relabelling preserves simplicity")
    }

    pub fn stats(&self) -> Result<GraphStats> {
        GraphStats::of(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

/// Degree summary used to decide which subdivision bounds apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub min_degree: usize,
    pub max_degree: usize,
    /// Number of degree-1 vertices.
    pub pendants: usize,
    pub connected: bool,
    pub tree: bool,
}

impl GraphStats {
    /// ```
    /// use stdom::{families, GraphStats};
    /// let s = GraphStats::of(&families::path(4).unwrap()).unwrap();
    /// assert_eq!((s.min_degree, s.max_degree, s.pendants), (1, 2, 2));
    /// assert!(s.connected && s.tree);
    /// ```
    pub fn of(g: &Graph) -> Result<Self> {
        if g.n() == 0 {
            return Err(Error::validation("degree statistics of the null graph"));
        }
        let degrees = g.degrees();
        Ok(GraphStats {
            min_degree: *degrees.iter().min().unwrap(),
            max_degree: *degrees.iter().max().unwrap(),
            pendants: degrees.iter().filter(|&&d| d == 1).count(),
            connected: g.is_connected(),
            tree: g.is_tree(),
        })
    }
}

/// A subset of the vertices of some graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    /// Set of the given members over universe `0..n`. Fails if a member is
    /// out of range.
    pub fn from_members(n: usize, members: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let mut s = VertexSet::new(n);
        for x in members {
            if x >= n {
                return Err(Error::validation(format!("vertex {x} is not in 0..{n}")));
            }
            s.bits.insert(x);
        }
        Ok(s)
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        VertexSet { bits }
    }

    /// Size of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, x: Vertex) {
        self.bits.insert(x);
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.bits.contains(x)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::Validation(_))));
        assert!(matches!(
            Graph::new(4, [(0, 1), (0, 1)]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            Graph::new(4, [(1, 0), (0, 1)]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::Validation(_))));
    }

    #[test]
    fn path_on_three() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges(), &[Edge::new(0, 1), Edge::new(1, 2)]);
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert!(g.is_tree());
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_forest());
    }

    #[test]
    fn stats_examples() {
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = k4.stats().unwrap();
        assert_eq!(
            (s.min_degree, s.max_degree, s.pendants, s.connected),
            (3, 3, 0, true)
        );
        assert!(!s.tree);

        let c3_k1 = Graph::new(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let s = c3_k1.stats().unwrap();
        assert_eq!(s.min_degree, 0);
        assert!(!s.connected);

        assert!(Graph::empty(0).stats().is_err());
    }

    #[test]
    fn edge_is_unordered() {
        assert_eq!(Edge::new(4, 2), Edge::new(2, 4));
        assert_eq!(Edge::new(4, 2).other(2), Some(4));
        assert_eq!(Edge::new(4, 2).other(3), None);
    }

    #[test]
    fn vertex_set_rejects_out_of_range() {
        assert!(VertexSet::from_members(3, [0, 3]).is_err());
        let s = VertexSet::from_members(5, [4, 1]).unwrap();
        assert_eq!(s.to_vec(), vec![1, 4]);
        assert_eq!(s.len(), 2);
    }
}
