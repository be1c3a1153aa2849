//! Exhaustive and seeded random graph sources for sweeps and fuzzing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest `n` for which [`labeled_graphs`] will enumerate.
pub const ENUMERATION_CAP: usize = 6;

/// All `2^(n(n-1)/2)` labelled simple graphs on `n` vertices.
///
/// Graph number `mask` contains the `i`-th pair of the lexicographic pair
/// order `(0,1), (0,2), .., (n-2,n-1)` exactly when bit `i` of `mask` is set,
/// and graphs come out in increasing `mask`.
///
/// ```
/// assert_eq!(stdom::generate::labeled_graphs(3).unwrap().count(), 8);
/// assert!(stdom::generate::labeled_graphs(7).is_err());
/// ```
pub fn labeled_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > ENUMERATION_CAP {
        return Err(Error::Cap {
            what: format!("enumeration of labelled graphs on {n} vertices"),
            cap: ENUMERATION_CAP,
        });
    }
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| Edge::new(i, j)))
        .collect();
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<Edge>,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::new(self.n, edges).expect("pairs are distinct"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// Erdős–Rényi `G(n, p)`; each pair is kept independently with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::validation("random graph needs n >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::validation(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push(Edge::new(i, j));
            }
        }
    }
    Graph::new(n, edges)
}

/// Uniform labelled tree on `n` vertices, decoded from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::validation("random tree needs n >= 1"));
    }
    if n <= 2 {
        return Graph::new(n, (1..n).map(|i| (0, i)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Graph::new(n, prufer_decode(n, &code))
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<Edge> {
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = (0..n)
            .find(|&y| degree[y] == 1)
            .expect("a leaf always exists");
        edges.push(Edge::new(leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&y| degree[y] == 1).collect();
    edges.push(Edge::new(rest[0], rest[1]));
    edges
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(labeled_graphs(0).unwrap().count(), 1);
        assert_eq!(labeled_graphs(1).unwrap().count(), 1);
        assert_eq!(labeled_graphs(2).unwrap().count(), 2);
        assert_eq!(labeled_graphs(3).unwrap().count(), 8);
        assert!(matches!(labeled_graphs(7), Err(Error::Cap { .. })));
    }

    #[test]
    fn enumeration_is_distinct() {
        let all: HashSet<Vec<Edge>> = labeled_graphs(5)
            .unwrap()
            .map(|g| g.edges().to_vec())
            .collect();
        assert_eq!(all.len(), 1 << 10);
    }

    #[test]
    fn random_graph_extremes() {
        for seed in 0..5 {
            assert_eq!(random_graph(5, 0.0, seed).unwrap().m(), 0);
            assert_eq!(random_graph(5, 1.0, seed).unwrap().m(), 10);
        }
        assert!(random_graph(5, 1.5, 0).is_err());
        assert!(random_graph(5, -0.1, 0).is_err());
        assert!(random_graph(5, f64::NAN, 0).is_err());
    }

    #[test]
    fn seeded_reproducible() {
        assert_eq!(
            random_graph(12, 0.4, 7).unwrap(),
            random_graph(12, 0.4, 7).unwrap()
        );
        assert_eq!(random_tree(20, 3).unwrap(), random_tree(20, 3).unwrap());
    }

    #[test]
    fn random_trees_are_trees() {
        for seed in 0..100 {
            let n = 1 + (seed as usize % 30);
            let t = random_tree(n, seed).unwrap();
            assert_eq!(t.m(), n - 1);
            assert!(t.is_connected());
            assert!(t.is_tree());
        }
    }
}
