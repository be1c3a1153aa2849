//! Brute-force canonical labelling for very small graphs.
//!
//! Tries all `n!` relabellings, so it is capped at [`ISO_CAP`] vertices. Used to
//! collapse search hits to one representative per isomorphism class.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

pub const ISO_CAP: usize = 9;

/// Adjacency bits of `g` relabelled by `perm`, in graph6 pair order.
fn code(g: &Graph, perm: &[Vertex]) -> u64 {
    let n = g.n();
    let mut inv = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        inv[p] = x;
    }
    let mut c = 0u64;
    for j in 1..n {
        for i in 0..j {
            c = c << 1 | g.has_edge(inv[i], inv[j]) as u64;
        }
    }
    c
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > ISO_CAP {
        return Err(Error::Cap {
            what: format!("canonical labelling of {} vertices", g.n()),
            cap: ISO_CAP,
        });
    }
    Ok(())
}

/// Calls `f` with every permutation of `0..n` in lexicographic order.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[Vertex])) {
    let mut p: Vec<Vertex> = (0..n).collect();
    loop {
        f(&p);
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// The relabelling of `g` with the largest adjacency code.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    check_cap(g)?;
    let mut best: Option<(u64, Vec<Vertex>)> = None;
    for_each_permutation(g.n(), |p| {
        let c = code(g, p);
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            best = Some((c, p.to_vec()));
        }
    });
    let (_, perm) = best.expect("at least one permutation");
    Ok(g.permuted(&perm))
}

/// Canonical form of a graph with one distinguished edge: the relabelling
/// maximising the adjacency code, ties broken by the smallest image of the edge.
pub fn canonical_pair(g: &Graph, e: Edge) -> Result<(Graph, Edge)> {
    check_cap(g)?;
    let mut best: Option<(u64, Edge, Vec<Vertex>)> = None;
    for_each_permutation(g.n(), |p| {
        let c = code(g, p);
        let img = Edge::new(p[e.u()], p[e.v()]);
        let better = match &best {
            None => true,
            Some((bc, be, _)) => c > *bc || (c == *bc && img < *be),
        };
        if better {
            best = Some((c, img, p.to_vec()));
        }
    });
    let (_, img, perm) = best.expect("at least one permutation");
    Ok((g.permuted(&perm), img))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.n() != b.n() || a.m() != b.m() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
