//! Test-only reference implementations, written without the library solver.
#![allow(dead_code)]

use stdom::solver::DominationMode;
use stdom::Graph;

/// Plain adjacency matrix copy of `g`.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for e in g.edges() {
        let (u, v) = e.endpoints();
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn allowed(mode: DominationMode, dx: usize, dy: usize) -> bool {
    match mode {
        DominationMode::Strong => dx <= dy,
        DominationMode::Weak => dx >= dy,
        DominationMode::Plain => true,
    }
}

/// Does the set encoded by `mask` dominate under `mode`?
pub fn dominates(a: &[Vec<bool>], mask: u64, mode: DominationMode) -> bool {
    let n = a.len();
    let deg: Vec<usize> = a.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    (0..n).all(|x| {
        mask >> x & 1 == 1
            || (0..n).any(|y| mask >> y & 1 == 1 && a[x][y] && allowed(mode, deg[x], deg[y]))
    })
}

/// Minimum dominating set size by scanning all `2^n` subsets.
pub fn brute_gamma(g: &Graph, mode: DominationMode) -> usize {
    let a = matrix(g);
    let n = a.len();
    assert!(n <= 20, "reference oracle is for tiny graphs");
    let mut best = n;
    for mask in 0u64..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size < best && dominates(&a, mask, mode) {
            best = size;
        }
    }
    best
}

pub fn brute_strong(g: &Graph) -> usize {
    brute_gamma(g, DominationMode::Strong)
}
