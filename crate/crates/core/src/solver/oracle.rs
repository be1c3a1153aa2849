use std::time::Instant;

use fixedbitset::FixedBitSet;

use super::{DominationMode, Method, SolveResult, SolveStats, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Masks are `u32`; anything past this would not finish anyway.
pub(super) const HARD_CAP: usize = 24;

/// Brute force: every subset of size 0, 1, 2, … in increasing bitmask order
/// within each size, returning the first one that dominates.
pub fn gamma_oracle(g: &Graph, mode: DominationMode, config: &SolverConfig) -> Result<SolveResult> {
    config.validate()?;
    let n = g.n();
    if n > config.oracle_cap {
        return Err(Error::Cap {
            what: format!("exhaustive oracle on {n} vertices"),
            cap: config.oracle_cap,
        });
    }
    let start = Instant::now();
    // cover[y]: y itself plus every neighbour y may dominate
    let cover: Vec<u32> = g
        .vertices()
        .map(|y| {
            g.neighbors(y)
                .iter()
                .filter(|&&x| mode.permits(g, x, y))
                .fold(1u32 << y, |acc, &x| acc | 1 << x)
        })
        .collect();
    let full: u32 = (1u32 << n) - 1;
    let mut tested = 0u64;
    for size in 0..=n {
        for mask in SubsetsOfSize::new(n, size) {
            tested += 1;
            let covered = (0..n)
                .filter(|&y| mask >> y & 1 == 1)
                .fold(0u32, |acc, y| acc | cover[y]);
            if covered == full {
                let mut bits = FixedBitSet::with_capacity(n);
                for y in (0..n).filter(|&y| mask >> y & 1 == 1) {
                    bits.insert(y);
                }
                return Ok(SolveResult {
                    gamma: size,
                    witness: VertexSet::from_bits(bits),
                    mode,
                    method: Method::Oracle,
                    stats: SolveStats {
                        nodes: tested,
                        elapsed: start.elapsed(),
                    },
                });
            }
        }
    }
    unreachable!("the full vertex set always dominates")
}

/// `k`-subsets of `0..n` as bitmasks in increasing numeric order (Gosper's hack).
struct SubsetsOfSize {
    next: Option<u32>,
    limit: u32,
}

impl SubsetsOfSize {
    fn new(n: usize, k: usize) -> Self {
        let limit = 1u32.checked_shl(n as u32).unwrap_or(0);
        let first = if k == 0 {
            0
        } else if k > n {
            return SubsetsOfSize { next: None, limit };
        } else {
            (1u32 << k) - 1
        };
        SubsetsOfSize {
            next: Some(first),
            limit,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (r != 0 && nxt < self.limit).then_some(nxt)
        };
        Some(cur)
    }
}
