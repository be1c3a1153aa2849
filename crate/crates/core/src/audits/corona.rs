use std::collections::BTreeMap;
use std::fmt;

use super::{describe, gamma_st, AuditStatus, BoundAudit, BoundCheck, TheoremId};
use crate::error::{Error, Result};
use crate::families::{corona, CoronaLabeling};
use crate::graph::{Edge, Graph};
use crate::solver::{Method, SolverConfig};
use crate::transforms::{delete_edge, subdivide_edge};

/// Which part of `G1 ∘ G2` an edge belongs to, in factor coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoronaEdgeClass {
    /// An edge of `G1` between two hubs.
    WithinG1(Edge),
    /// An edge of `G2` inside copy `copy`.
    WithinCopy { copy: usize, edge: Edge },
    /// The edge from hub `copy` to vertex `vertex` of its own copy.
    Cross { copy: usize, vertex: usize },
}

impl CoronaEdgeClass {
    pub fn resolve(&self, g1: &Graph, g2: &Graph, labels: &CoronaLabeling) -> Result<Edge> {
        let bad = |what: String| Err(Error::validation(format!("edge class {self}: {what}")));
        match *self {
            CoronaEdgeClass::WithinG1(e) => {
                if !g1.contains_edge(e) {
                    return bad(format!("{e} is not an edge of G1"));
                }
                Ok(e)
            }
            CoronaEdgeClass::WithinCopy { copy, edge } => {
                if copy >= g1.n() {
                    return bad(format!("copy {copy} out of range"));
                }
                if !g2.contains_edge(edge) {
                    return bad(format!("{edge} is not an edge of G2"));
                }
                Ok(Edge::new(
                    labels.copy_vertex(copy, edge.u()),
                    labels.copy_vertex(copy, edge.v()),
                ))
            }
            CoronaEdgeClass::Cross { copy, vertex } => {
                if copy >= g1.n() || vertex >= g2.n() {
                    return bad("index out of range".to_string());
                }
                Ok(Edge::new(
                    labels.hub(copy),
                    labels.copy_vertex(copy, vertex),
                ))
            }
        }
    }

    /// The class of a product edge, or `None` if `e` is not an edge of the product.
    pub fn classify(e: Edge, labels: &CoronaLabeling) -> Option<Self> {
        let (a, b) = e.endpoints();
        let n1 = labels.n1;
        let copy_of = |x: usize| {
            (x >= n1 && labels.n2 > 0).then(|| ((x - n1) / labels.n2, (x - n1) % labels.n2))
        };
        if b >= labels.total() || a == b {
            return None;
        }
        match (copy_of(a), copy_of(b)) {
            (None, None) => Some(CoronaEdgeClass::WithinG1(e)),
            (None, Some((i, j))) => {
                (i == a).then_some(CoronaEdgeClass::Cross { copy: i, vertex: j })
            }
            (Some((i, x)), Some((k, y))) => (i == k).then(|| CoronaEdgeClass::WithinCopy {
                copy: i,
                edge: Edge::new(x, y),
            }),
            (Some(_), None) => None,
        }
    }

    /// Change in `γ` claimed for deleting an edge of this class.
    pub fn predicted_deletion_delta(&self) -> i64 {
        match self {
            CoronaEdgeClass::Cross { .. } => 1,
            _ => 0,
        }
    }

    /// Change in `γ` claimed for subdividing an edge of this class.
    pub fn predicted_subdivision_delta(&self) -> i64 {
        match self {
            CoronaEdgeClass::WithinG1(_) => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for CoronaEdgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoronaEdgeClass::WithinG1(e) => write!(f, "within-g1({e})"),
            CoronaEdgeClass::WithinCopy { copy, edge } => write!(f, "within-copy({copy},{edge})"),
            CoronaEdgeClass::Cross { copy, vertex } => write!(f, "cross({copy},{vertex})"),
        }
    }
}

/// Every edge of `G1 ∘ G2` as a class, in product edge order of construction:
/// `G1` edges, then per copy its internal edges followed by its cross edges.
pub fn corona_edge_classes(g1: &Graph, g2: &Graph) -> Vec<CoronaEdgeClass> {
    let mut out: Vec<CoronaEdgeClass> = g1
        .edges()
        .iter()
        .map(|&e| CoronaEdgeClass::WithinG1(e))
        .collect();
    for copy in 0..g1.n() {
        out.extend(
            g2.edges()
                .iter()
                .map(|&edge| CoronaEdgeClass::WithinCopy { copy, edge }),
        );
        out.extend((0..g2.n()).map(|vertex| CoronaEdgeClass::Cross { copy, vertex }));
    }
    out
}

/// `γ(G1 ∘ G2)` next to `|V(G1)|`, which the corona theorems take as given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoronaBaseline {
    pub gamma: i64,
    pub n1: i64,
    pub method: Method,
}

impl CoronaBaseline {
    pub fn holds(&self) -> bool {
        self.gamma == self.n1
    }
}

struct Product {
    graph: Graph,
    labels: CoronaLabeling,
    label: String,
    baseline: CoronaBaseline,
}

fn product(g1: &Graph, g2: &Graph, config: &SolverConfig) -> Result<Product> {
    if g1.n() == 0 {
        return Err(Error::validation("corona needs a nonempty first factor"));
    }
    let (graph, labels) = corona(g1, g2);
    let (gamma, method) = gamma_st(&graph, config)?;
    Ok(Product {
        label: format!("corona({},{})", describe(g1), describe(g2)),
        baseline: CoronaBaseline {
            gamma,
            n1: g1.n() as i64,
            method,
        },
        graph,
        labels,
    })
}

pub fn corona_baseline(g1: &Graph, g2: &Graph, config: &SolverConfig) -> Result<CoronaBaseline> {
    Ok(product(g1, g2, config)?.baseline)
}

fn equality_audit(
    theorem: TheoremId,
    p: &Product,
    class: CoronaEdgeClass,
    key: &str,
    after: (i64, Method),
    predicted: i64,
) -> BoundAudit {
    let base = p.baseline.gamma;
    let quantities = BTreeMap::from([
        ("gamma_g".to_string(), base),
        ("n1".to_string(), p.baseline.n1),
        (key.to_string(), after.0),
        ("delta".to_string(), after.0 - base),
        ("predicted_delta".to_string(), predicted),
    ]);
    BoundAudit {
        theorem,
        instance: format!("{} {class}", p.label),
        status: AuditStatus::Applicable,
        quantities,
        check: Some(BoundCheck {
            lower: base + predicted,
            middle: after.0,
            upper: base + predicted,
        }),
        methods: vec![p.baseline.method, after.1],
    }
}

/// Compares `γ((G1∘G2) - e) - γ(G1∘G2)` with the claimed delta for the class.
pub fn audit_corona_deletion(
    g1: &Graph,
    g2: &Graph,
    class: CoronaEdgeClass,
    config: &SolverConfig,
) -> Result<BoundAudit> {
    let p = product(g1, g2, config)?;
    let e = class.resolve(g1, g2, &p.labels)?;
    let after = gamma_st(&delete_edge(&p.graph, e)?, config)?;
    Ok(equality_audit(
        TheoremId::CoronaDeletion,
        &p,
        class,
        "gamma_minus_e",
        after,
        class.predicted_deletion_delta(),
    ))
}

/// Compares `γ((G1∘G2)_e) - γ(G1∘G2)` with the claimed delta for the class.
pub fn audit_corona_subdivision(
    g1: &Graph,
    g2: &Graph,
    class: CoronaEdgeClass,
    config: &SolverConfig,
) -> Result<BoundAudit> {
    let p = product(g1, g2, config)?;
    let e = class.resolve(g1, g2, &p.labels)?;
    let after = gamma_st(&subdivide_edge(&p.graph, e)?.graph, config)?;
    Ok(equality_audit(
        TheoremId::CoronaSubdivision,
        &p,
        class,
        "gamma_sub_e",
        after,
        class.predicted_subdivision_delta(),
    ))
}
