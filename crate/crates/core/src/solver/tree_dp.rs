use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::{DominationMode, Method, SolveResult, SolveStats};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

const INF: usize = usize::MAX / 4;

/// Per-vertex states of the rooted subtree DP.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    /// In the set.
    In,
    /// Not in the set, dominated by one of its children.
    ByChild,
    /// Not in the set; the parent has to be in the set and allowed to
    /// dominate it.
    ByParent,
}

/// Minimum dominating set of a forest in linear time.
///
/// Each tree is rooted at its smallest vertex. Because degrees are fixed up
/// front, "may `y` dominate `x`" is a static property of each edge, so the
/// classical three-state domination DP carries over with the edge condition
/// checked in both directions.
pub fn gamma_tree_dp(g: &Graph, mode: DominationMode) -> Result<SolveResult> {
    if !g.is_forest() {
        return Err(Error::validation("tree DP needs an acyclic graph"));
    }
    let start = Instant::now();
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut roots = Vec::new();
    let mut seen = vec![false; n];
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        roots.push(r);
        let first = order.len();
        order.push(r);
        let mut i = first;
        while i < order.len() {
            let x = order[i];
            i += 1;
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    order.push(y);
                }
            }
        }
    }
    let parent = &parent;
    let children = |x: Vertex| {
        g.neighbors(x)
            .iter()
            .copied()
            .filter(move |&c| parent[c] == x)
    };

    let mut cost_in = vec![INF; n];
    let mut cost_by_child = vec![INF; n];
    let mut cost_by_parent = vec![INF; n];
    let mut forced_child = vec![usize::MAX; n];
    for &x in order.iter().rev() {
        let mut with_x = 1usize;
        let mut without_x = 0usize;
        let mut best_delta = INF;
        for c in children(x) {
            let via_parent = if mode.permits(g, c, x) {
                cost_by_parent[c]
            } else {
                INF
            };
            with_x += cost_in[c].min(cost_by_child[c]).min(via_parent);
            let cheapest = cost_in[c].min(cost_by_child[c]);
            without_x += cheapest;
            if mode.permits(g, x, c) {
                let delta = cost_in[c] - cheapest;
                if delta < best_delta {
                    best_delta = delta;
                    forced_child[x] = c;
                }
            }
        }
        cost_in[x] = with_x.min(INF);
        cost_by_parent[x] = without_x.min(INF);
        cost_by_child[x] = if best_delta < INF {
            (without_x + best_delta).min(INF)
        } else {
            INF
        };
    }

    let mut state = vec![State::In; n];
    for &r in &roots {
        state[r] = if cost_in[r] <= cost_by_child[r] {
            State::In
        } else {
            State::ByChild
        };
    }
    for &x in &order {
        for c in children(x) {
            let open = cost_in[c].min(cost_by_child[c]);
            let pick_open = if cost_in[c] <= cost_by_child[c] {
                State::In
            } else {
                State::ByChild
            };
            state[c] = match state[x] {
                State::In => {
                    if mode.permits(g, c, x) && cost_by_parent[c] < open {
                        State::ByParent
                    } else {
                        pick_open
                    }
                }
                State::ByChild if forced_child[x] == c => State::In,
                State::ByChild | State::ByParent => pick_open,
            };
        }
    }

    let mut bits = FixedBitSet::with_capacity(n);
    for x in (0..n).filter(|&x| state[x] == State::In) {
        bits.insert(x);
    }
    let gamma = roots
        .iter()
        .map(|&r| cost_in[r].min(cost_by_child[r]))
        .sum::<usize>();
    debug_assert_eq!(gamma, bits.count_ones(..));
    Ok(SolveResult {
        gamma,
        witness: VertexSet::from_bits(bits),
        mode,
        method: Method::TreeDp,
        stats: SolveStats {
            nodes: n as u64,
            elapsed: start.elapsed(),
        },
    })
}
