use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::{DominationMode, Method, SolveResult, SolveStats, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// Iterative-deepening branch and bound.
///
/// Each connected component is solved on its own. Within a component the
/// target size `s` starts at `⌈n_c / (Δ_c + 1)⌉` and grows until a
/// dominating set of size `s` is found or `s` reaches the size of a greedy
/// solution, which is then optimal. For a fixed `s` the search branches on the
/// undominated vertex with the fewest remaining candidate dominators and
/// prunes with a packing bound: undominated vertices whose candidate sets are
/// pairwise disjoint each need their own pick.
pub fn gamma_bnb(g: &Graph, mode: DominationMode, config: &SolverConfig) -> Result<SolveResult> {
    config.validate()?;
    let start = Instant::now();
    let comps: Vec<Component> = g
        .components()
        .into_iter()
        .map(|c| Component::new(g, mode, c))
        .collect();

    let mut nodes = 0u64;
    let mut witness = FixedBitSet::with_capacity(g.n());
    let mut exact = 0usize;
    for (i, comp) in comps.iter().enumerate() {
        match comp.solve(&mut nodes, config.node_budget) {
            Ok(picks) => {
                exact += picks.len();
                for y in picks {
                    witness.insert(comp.global[y]);
                }
            }
            Err(Exhausted { proven_lower }) => {
                let rest = &comps[i + 1..];
                return Err(Error::Budget {
                    budget: config.node_budget,
                    lower: exact + proven_lower + rest.iter().map(|c| c.lower).sum::<usize>(),
                    upper: exact
                        + comp.greedy().len()
                        + rest.iter().map(|c| c.greedy().len()).sum::<usize>(),
                });
            }
        }
    }
    Ok(SolveResult {
        gamma: exact,
        witness: VertexSet::from_bits(witness),
        mode,
        method: Method::Bnb,
        stats: SolveStats {
            nodes,
            elapsed: start.elapsed(),
        },
    })
}

struct Exhausted {
    proven_lower: usize,
}

/// One connected component, relabelled `0..k` in descending degree then
/// ascending original id, so ascending local id is the branching order.
struct Component {
    global: Vec<Vertex>,
    /// `cover[y]`: local vertices that `y` dominates, including `y`.
    cover: Vec<FixedBitSet>,
    /// `cands[x]`: local vertices that can dominate `x`, including `x`.
    cands: Vec<FixedBitSet>,
    lower: usize,
}

impl Component {
    fn new(g: &Graph, mode: DominationMode, mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_by_key(|&x| (std::cmp::Reverse(g.degree(x)), x));
        let k = vertices.len();
        let mut local = vec![usize::MAX; g.n()];
        for (i, &x) in vertices.iter().enumerate() {
            local[x] = i;
        }
        let mut cover = vec![FixedBitSet::with_capacity(k); k];
        let mut cands = vec![FixedBitSet::with_capacity(k); k];
        for (ly, &y) in vertices.iter().enumerate() {
            cover[ly].insert(ly);
            cands[ly].insert(ly);
            for &x in g.neighbors(y) {
                if mode.permits(g, x, y) {
                    cover[ly].insert(local[x]);
                    cands[local[x]].insert(ly);
                }
            }
        }
        let max_deg = vertices.first().map_or(0, |&x| g.degree(x));
        Component {
            lower: k.div_ceil(max_deg + 1),
            global: vertices,
            cover,
            cands,
        }
    }

    fn len(&self) -> usize {
        self.global.len()
    }

    fn all(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.len());
        s.insert_range(..);
        s
    }

    /// Repeatedly take the vertex covering the most undominated vertices.
    fn greedy(&self) -> Vec<usize> {
        let mut undominated = self.all();
        let mut picks = Vec::new();
        while !undominated.is_clear() {
            let best = (0..self.len())
                .max_by_key(|&y| {
                    (
                        self.cover[y].intersection_count(&undominated),
                        std::cmp::Reverse(y),
                    )
                })
                .expect("component is nonempty");
            undominated.difference_with(&self.cover[best]);
            picks.push(best);
        }
        picks.sort_unstable();
        picks
    }

    fn solve(&self, nodes: &mut u64, budget: u64) -> Result<Vec<usize>, Exhausted> {
        let greedy = self.greedy();
        let mut search = Search {
            comp: self,
            nodes,
            budget,
            picks: Vec::new(),
        };
        for target in self.lower..greedy.len() {
            match search.dfs(&self.all(), &self.all(), target) {
                Ok(true) => {
                    let mut picks = std::mem::take(&mut search.picks);
                    picks.sort_unstable();
                    return Ok(picks);
                }
                Ok(false) => {}
                Err(()) => {
                    return Err(Exhausted {
                        proven_lower: target,
                    })
                }
            }
        }
        Ok(greedy)
    }
}

struct Search<'a> {
    comp: &'a Component,
    nodes: &'a mut u64,
    budget: u64,
    picks: Vec<usize>,
}

impl Search<'_> {
    /// Looks for at most `remaining` more picks from `allowed` covering
    /// `undominated`. `Err(())` when the node budget runs out.
    fn dfs(
        &mut self,
        undominated: &FixedBitSet,
        allowed: &FixedBitSet,
        remaining: usize,
    ) -> Result<bool, ()> {
        *self.nodes += 1;
        if *self.nodes > self.budget {
            return Err(());
        }
        if undominated.is_clear() {
            return Ok(true);
        }
        if remaining == 0 {
            return Ok(false);
        }

        let mut options: Vec<(usize, usize, FixedBitSet)> = Vec::new();
        for x in undominated.ones() {
            let mut avail = self.comp.cands[x].clone();
            avail.intersect_with(allowed);
            let count = avail.count_ones(..);
            if count == 0 {
                return Ok(false);
            }
            options.push((count, x, avail));
        }
        options.sort_unstable_by_key(|&(count, x, _)| (count, x));

        let mut used = FixedBitSet::with_capacity(self.comp.len());
        let mut packing = 0;
        for (_, _, avail) in &options {
            if used.is_disjoint(avail) {
                used.union_with(avail);
                packing += 1;
                if packing > remaining {
                    return Ok(false);
                }
            }
        }

        let (_, _, branch) = &options[0];
        let mut allowed = allowed.clone();
        for y in branch.ones() {
            let mut rest = undominated.clone();
            rest.difference_with(&self.comp.cover[y]);
            self.picks.push(y);
            if self.dfs(&rest, &allowed, remaining - 1)? {
                return Ok(true);
            }
            self.picks.pop();
            // every set containing y has now been tried
            allowed.remove(y);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cycle, path};
    use crate::solver::verify;

    const S: DominationMode = DominationMode::Strong;

    fn gamma(g: &Graph) -> usize {
        let r = gamma_bnb(g, S, &SolverConfig::default()).unwrap();
        assert!(verify(g, &r.witness, S).unwrap());
        assert_eq!(r.witness.len(), r.gamma);
        r.gamma
    }

    #[test]
    fn examples() {
        assert_eq!(gamma(&cycle(10).unwrap()), 4);
        assert_eq!(gamma(&complete_bipartite(2, 3).unwrap()), 2);
        assert_eq!(gamma(&Graph::empty(4)), 4);
        assert_eq!(gamma(&Graph::empty(0)), 0);
        assert_eq!(gamma(&path(1).unwrap()), 1);
    }

    #[test]
    fn budget_error_carries_bounds() {
        let g = crate::generate::random_graph(40, 0.1, 0).unwrap();
        let exact = gamma_bnb(&g, S, &SolverConfig::default()).unwrap().gamma;
        let err = gamma_bnb(&g, S, &SolverConfig::default().with_node_budget(5)).unwrap_err();
        match err {
            Error::Budget { lower, upper, .. } => {
                assert!(
                    lower <= exact && exact <= upper && lower < upper,
                    "[{lower}, {upper}] vs {exact}"
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn deterministic() {
        let g = crate::generate::random_graph(14, 0.3, 11).unwrap();
        let cfg = SolverConfig::default();
        let a = gamma_bnb(&g, S, &cfg).unwrap();
        let b = gamma_bnb(&g, S, &cfg).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.stats.nodes, b.stats.nodes);
    }
}
