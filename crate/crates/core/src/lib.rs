//! Exact strong domination numbers of small simple graphs, the edge
//! operations that perturb them, and auditors for bounds relating the two.
//!
//! A set `D` of vertices *strongly dominates* `G` when every vertex `x`
//! outside `D` has a neighbour `y ∈ D` with `deg(x) ≤ deg(y)`; `γ_st(G)` is
//! the smallest such set. Degrees always refer to the whole graph.
//!
//! ```
//! use stdom::families::cycle;
//! use stdom::solver::{solve, DominationMode, SolverConfig};
//!
//! let c10 = cycle(10).unwrap();
//! let r = solve(&c10, DominationMode::Strong, &SolverConfig::default()).unwrap();
//! assert_eq!(r.gamma, 4);
//! ```
//!
//! Modules:
//!
//! - [`graph`]: the immutable [`Graph`], [`Edge`] and [`VertexSet`] types.
//! - [`families`], [`fixtures`], [`generate`]: named families, corona
//!   products, the bundled tree fixtures, enumeration and seeded random graphs.
//! - [`transforms`]: edge deletion, subdivision, contraction, k-subdivision.
//! - [`solver`]: exhaustive oracle, branch and bound, forest DP.
//! - [`audits`]: closed forms and one auditor per bound.
//! - [`formats`]: edge lists, graph6 and JSON-lines reports.

pub mod audits;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod iso;
pub mod solver;
pub mod transforms;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphStats, Vertex, VertexSet};
