use std::collections::BTreeMap;

use num_rational::Ratio;

use super::{describe, gamma_st, AuditStatus, BoundAudit, BoundCheck, TheoremId};
use crate::error::Result;
use crate::fixtures::{fixture, FixtureId, FixtureRole};
use crate::formats::report::{ReportRecord, Status};
use crate::graph::{Edge, Graph};
use crate::solver::{Method, SolverConfig};
use crate::transforms::{contract_edge, delete_edge, subdivide_edge};

const K2_REASON: &str = "edge is a K2 component";

/// Audits single-edge theorems on one graph, solving `γ(G)` only once.
#[derive(Debug, Clone)]
pub struct EdgeAuditor<'g> {
    graph: &'g Graph,
    label: String,
    config: SolverConfig,
    gamma: i64,
    method: Method,
}

/// Everything measured for one edge; operations are solved on demand.
struct Probe<'a, 'g> {
    auditor: &'a EdgeAuditor<'g>,
    edge: Edge,
    minus: Option<(i64, Method)>,
    sub: Option<(i64, Method)>,
    contracted: Option<(i64, Method)>,
}

impl<'a, 'g> Probe<'a, 'g> {
    fn minus(&mut self) -> Result<(i64, Method)> {
        if self.minus.is_none() {
            let g = delete_edge(self.auditor.graph, self.edge)?;
            self.minus = Some(gamma_st(&g, &self.auditor.config)?);
        }
        Ok(self.minus.unwrap())
    }

    fn sub(&mut self) -> Result<(i64, Method)> {
        if self.sub.is_none() {
            let s = subdivide_edge(self.auditor.graph, self.edge)?;
            self.sub = Some(gamma_st(&s.graph, &self.auditor.config)?);
        }
        Ok(self.sub.unwrap())
    }

    fn contracted(&mut self) -> Result<(i64, Method)> {
        if self.contracted.is_none() {
            let c = contract_edge(self.auditor.graph, self.edge)?;
            self.contracted = Some(gamma_st(&c.graph, &self.auditor.config)?);
        }
        Ok(self.contracted.unwrap())
    }
}

impl<'g> EdgeAuditor<'g> {
    pub fn new(graph: &'g Graph, config: &SolverConfig) -> Result<Self> {
        let (gamma, method) = gamma_st(graph, config)?;
        Ok(EdgeAuditor {
            graph,
            label: describe(graph),
            config: *config,
            gamma,
            method,
        })
    }

    /// Replaces the graph6 label used in instance descriptors.
    pub fn named(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn gamma(&self) -> i64 {
        self.gamma
    }

    fn instance(&self, e: Edge) -> String {
        format!("{} e={e}", self.label)
    }

    fn probe(&self, e: Edge) -> Result<Probe<'_, 'g>> {
        self.graph.require_edge(e)?;
        Ok(Probe {
            auditor: self,
            edge: e,
            minus: None,
            sub: None,
            contracted: None,
        })
    }

    fn degrees(&self, e: Edge) -> (i64, i64) {
        (
            self.graph.degree(e.u()) as i64,
            self.graph.degree(e.v()) as i64,
        )
    }

    fn is_k2_component(&self, e: Edge) -> bool {
        self.degrees(e) == (1, 1)
    }

    fn bound(
        &self,
        theorem: TheoremId,
        e: Edge,
        key: &str,
        middle: (i64, Method),
        lower: i64,
        upper: i64,
    ) -> BoundAudit {
        let (du, dv) = self.degrees(e);
        let quantities = BTreeMap::from([
            ("gamma_g".to_string(), self.gamma),
            (key.to_string(), middle.0),
            ("deg_u".to_string(), du),
            ("deg_v".to_string(), dv),
        ]);
        BoundAudit {
            theorem,
            instance: self.instance(e),
            status: AuditStatus::Applicable,
            quantities,
            check: Some(BoundCheck {
                lower,
                middle: middle.0,
                upper,
            }),
            methods: vec![self.method, middle.1],
        }
    }

    fn deletion_with(&self, p: &mut Probe<'_, 'g>) -> Result<BoundAudit> {
        let e = p.edge;
        if self.is_k2_component(e) {
            return Ok(BoundAudit::not_applicable(
                TheoremId::EdgeDeletion,
                self.instance(e),
                K2_REASON,
            ));
        }
        let (du, dv) = self.degrees(e);
        let minus = p.minus()?;
        Ok(self.bound(
            TheoremId::EdgeDeletion,
            e,
            "gamma_minus_e",
            minus,
            self.gamma - 1,
            self.gamma + du + dv - 2,
        ))
    }

    fn subdivision_with(&self, p: &mut Probe<'_, 'g>) -> Result<BoundAudit> {
        let sub = p.sub()?;
        Ok(self.bound(
            TheoremId::EdgeSubdivision,
            p.edge,
            "gamma_sub_e",
            sub,
            self.gamma,
            self.gamma + 1,
        ))
    }

    fn contraction_with(&self, p: &mut Probe<'_, 'g>) -> Result<BoundAudit> {
        let e = p.edge;
        if self.is_k2_component(e) {
            return Ok(BoundAudit::not_applicable(
                TheoremId::EdgeContraction,
                self.instance(e),
                K2_REASON,
            ));
        }
        let (du, dv) = self.degrees(e);
        let contracted = p.contracted()?;
        Ok(self.bound(
            TheoremId::EdgeContraction,
            e,
            "gamma_contract_e",
            contracted,
            self.gamma - du - dv + 3,
            self.gamma + 1,
        ))
    }

    fn corollary_with(&self, p: &mut Probe<'_, 'g>) -> Result<CorollaryAudit> {
        let e = p.edge;
        let instance = self.instance(e);
        if self.is_k2_component(e) {
            return Ok(CorollaryAudit {
                instance,
                status: AuditStatus::NotApplicable(K2_REASON.to_string()),
                gamma: self.gamma,
                alpha: 0,
                beta: 0,
                lower: Ratio::from_integer(0),
                upper: Ratio::from_integer(0),
                methods: Vec::new(),
            });
        }
        let (du, dv) = self.degrees(e);
        let (minus, m1) = p.minus()?;
        let (sub, m2) = p.sub()?;
        let (contracted, m3) = p.contracted()?;
        let alpha = minus + sub + contracted;
        let beta = du + dv;
        Ok(CorollaryAudit {
            instance,
            status: AuditStatus::Applicable,
            gamma: self.gamma,
            alpha,
            beta,
            lower: Ratio::new(alpha - beta, 3),
            upper: Ratio::new(alpha + beta + 2, 3),
            methods: vec![self.method, m1, m2, m3],
        })
    }

    pub fn deletion(&self, e: Edge) -> Result<BoundAudit> {
        self.deletion_with(&mut self.probe(e)?)
    }

    pub fn subdivision(&self, e: Edge) -> Result<BoundAudit> {
        self.subdivision_with(&mut self.probe(e)?)
    }

    pub fn contraction(&self, e: Edge) -> Result<BoundAudit> {
        self.contraction_with(&mut self.probe(e)?)
    }

    pub fn corollary(&self, e: Edge) -> Result<CorollaryAudit> {
        self.corollary_with(&mut self.probe(e)?)
    }

    /// Runs the requested edge theorems on `e`, sharing solver calls between
    /// them. Non-edge theorem ids are ignored.
    pub fn records(&self, e: Edge, theorems: &[TheoremId]) -> Result<Vec<ReportRecord>> {
        let mut p = self.probe(e)?;
        let mut out = Vec::new();
        for &t in theorems {
            let record = match t {
                TheoremId::EdgeDeletion => self.deletion_with(&mut p)?.to_record(),
                TheoremId::EdgeSubdivision => self.subdivision_with(&mut p)?.to_record(),
                TheoremId::EdgeContraction => self.contraction_with(&mut p)?.to_record(),
                TheoremId::Corollary => self.corollary_with(&mut p)?.to_record(),
                _ => continue,
            };
            out.push(record);
        }
        Ok(out)
    }
}

/// The sandwich `(α - β)/3 ≤ γ(G) ≤ (α + β + 2)/3` with
/// `α = γ(G-e) + γ(G_e) + γ(G/e)` and `β = deg u + deg v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorollaryAudit {
    pub instance: String,
    pub status: AuditStatus,
    pub gamma: i64,
    pub alpha: i64,
    pub beta: i64,
    pub lower: Ratio<i64>,
    pub upper: Ratio<i64>,
    pub methods: Vec<Method>,
}

impl CorollaryAudit {
    pub fn is_applicable(&self) -> bool {
        self.status == AuditStatus::Applicable
    }

    pub fn pass(&self) -> bool {
        let g = Ratio::from_integer(self.gamma);
        self.is_applicable() && self.lower <= g && g <= self.upper
    }

    pub fn tight_lower(&self) -> bool {
        self.is_applicable() && self.lower == Ratio::from_integer(self.gamma)
    }

    pub fn tight_upper(&self) -> bool {
        self.is_applicable() && self.upper == Ratio::from_integer(self.gamma)
    }

    pub fn to_record(&self) -> ReportRecord {
        let status = match (&self.status, self.pass()) {
            (AuditStatus::NotApplicable(_), _) => Status::NotApplicable,
            (_, true) => Status::Pass,
            (_, false) => Status::Fail,
        };
        let mut r = ReportRecord::new(TheoremId::Corollary.as_str(), &self.instance, status);
        match &self.status {
            AuditStatus::NotApplicable(reason) => r.reason = Some(reason.clone()),
            AuditStatus::Applicable => {
                r = r
                    .with("gamma_g", self.gamma)
                    .with("alpha", self.alpha)
                    .with("beta", self.beta)
                    .with("lower", crate::formats::report::Quantity::ratio(self.lower))
                    .with("upper", crate::formats::report::Quantity::ratio(self.upper));
            }
        }
        r.tight_lower = self.tight_lower();
        r.tight_upper = self.tight_upper();
        r.method = super::method_label(&self.methods);
        r
    }
}

/// `γ(G) - 1 ≤ γ(G-e) ≤ γ(G) + deg u + deg v - 2`; not applicable when `e`
/// is a whole `K2` component.
pub fn audit_edge_deletion(g: &Graph, e: Edge, config: &SolverConfig) -> Result<BoundAudit> {
    g.require_edge(e)?;
    EdgeAuditor::new(g, config)?.deletion(e)
}

/// `γ(G) ≤ γ(G_e) ≤ γ(G) + 1`, applicable to every edge.
pub fn audit_edge_subdivision(g: &Graph, e: Edge, config: &SolverConfig) -> Result<BoundAudit> {
    g.require_edge(e)?;
    EdgeAuditor::new(g, config)?.subdivision(e)
}

/// `γ(G) - deg u - deg v + 3 ≤ γ(G/e) ≤ γ(G) + 1`; not applicable when `e`
/// is a whole `K2` component.
pub fn audit_edge_contraction(g: &Graph, e: Edge, config: &SolverConfig) -> Result<BoundAudit> {
    g.require_edge(e)?;
    EdgeAuditor::new(g, config)?.contraction(e)
}

pub fn audit_corollary(g: &Graph, e: Edge, config: &SolverConfig) -> Result<CorollaryAudit> {
    g.require_edge(e)?;
    EdgeAuditor::new(g, config)?.corollary(e)
}

/// Runs the auditor matching the fixture's role on its marked edge and
/// reports whatever slack it measures.
pub fn audit_fixture_tightness(id: FixtureId, config: &SolverConfig) -> Result<BoundAudit> {
    let fx = fixture(id);
    let auditor = EdgeAuditor::new(&fx.graph, config)?.named(id.as_str());
    match id.role() {
        FixtureRole::Deletion => auditor.deletion(fx.edge),
        FixtureRole::Contraction => auditor.contraction(fx.edge),
    }
}
