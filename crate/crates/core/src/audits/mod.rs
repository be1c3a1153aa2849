//! Auditors for the strong-domination bounds under edge operations.
//!
//! Every auditor computes each quantity in the inequality it checks with the
//! exact solver, evaluates preconditions first, and records the outcome as a
//! [`BoundAudit`] (or a [`CorollaryAudit`] / [`KSubAudit`]). Nothing here
//! assumes a bound holds: a violated inequality is reported as a failure with
//! all of its inputs.
//!
//! | theorem id           | checked chain |
//! |----------------------|---------------|
//! | `edge-deletion`      | `γ(G) - 1 ≤ γ(G-e) ≤ γ(G) + deg u + deg v - 2` |
//! | `edge-subdivision`   | `γ(G) ≤ γ(G_e) ≤ γ(G) + 1` |
//! | `edge-contraction`   | `γ(G) - deg u - deg v + 3 ≤ γ(G/e) ≤ γ(G) + 1` |
//! | `corollary`          | `(α - β)/3 ≤ γ(G) ≤ (α + β + 2)/3` |
//! | `corona-deletion`    | `γ((G1∘G2) - e) = γ(G1∘G2) + {0, 0, 1}` |
//! | `corona-subdivision` | `γ((G1∘G2)_e) = γ(G1∘G2) + {0, 1, 1}` |
//! | `ksub-*`             | `γ(G^{1/k})` against the closed forms in [`formulas`] |
//!
//! Here `γ` is the strong domination number throughout.

mod corona;
mod edge;
pub mod formulas;
mod ksub;
mod search;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::report::{ReportRecord, Status};
use crate::graph::Graph;
use crate::solver::{self, DominationMode, Method, SolverConfig};

pub use corona::{
    audit_corona_deletion, audit_corona_subdivision, corona_baseline, corona_edge_classes,
    CoronaBaseline, CoronaEdgeClass,
};
pub use edge::{
    audit_corollary, audit_edge_contraction, audit_edge_deletion, audit_edge_subdivision,
    audit_fixture_tightness, CorollaryAudit, EdgeAuditor,
};
pub use ksub::{audit_ksub, audit_ksub_named, ksub_not_applicable, KSubAudit, KSubKind};
pub use search::{search_equal_deletion_subdivision, EqualPair, RandomBatch, SearchPool};
pub use sweep::{audit_all_edges, SweepSummary, TheoremTally};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    EdgeDeletion,
    EdgeSubdivision,
    EdgeContraction,
    Corollary,
    CoronaDeletion,
    CoronaSubdivision,
    KsubExact,
    KsubUpper,
    KsubPendant,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::EdgeDeletion,
        TheoremId::EdgeSubdivision,
        TheoremId::EdgeContraction,
        TheoremId::Corollary,
        TheoremId::CoronaDeletion,
        TheoremId::CoronaSubdivision,
        TheoremId::KsubExact,
        TheoremId::KsubUpper,
        TheoremId::KsubPendant,
    ];

    /// The four theorems that apply to a single edge of an arbitrary graph.
    pub const EDGE: [TheoremId; 4] = [
        TheoremId::EdgeDeletion,
        TheoremId::EdgeSubdivision,
        TheoremId::EdgeContraction,
        TheoremId::Corollary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::EdgeDeletion => "edge-deletion",
            TheoremId::EdgeSubdivision => "edge-subdivision",
            TheoremId::EdgeContraction => "edge-contraction",
            TheoremId::Corollary => "corollary",
            TheoremId::CoronaDeletion => "corona-deletion",
            TheoremId::CoronaSubdivision => "corona-subdivision",
            TheoremId::KsubExact => "ksub-exact",
            TheoremId::KsubUpper => "ksub-upper",
            TheoremId::KsubPendant => "ksub-pendant",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Lookup {
                kind: "theorem",
                id: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditStatus {
    Applicable,
    NotApplicable(String),
}

/// `lower ≤ middle ≤ upper`, all exact integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub lower: i64,
    pub middle: i64,
    pub upper: i64,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.lower <= self.middle && self.middle <= self.upper
    }

    pub fn tight_lower(&self) -> bool {
        self.lower == self.middle
    }

    pub fn tight_upper(&self) -> bool {
        self.middle == self.upper
    }
}

#[derive(Debug, Clone)]
pub struct BoundAudit {
    pub theorem: TheoremId,
    pub instance: String,
    pub status: AuditStatus,
    pub quantities: BTreeMap<String, i64>,
    /// `None` exactly when the audit is not applicable.
    pub check: Option<BoundCheck>,
    pub methods: Vec<Method>,
}

impl BoundAudit {
    fn not_applicable(theorem: TheoremId, instance: String, reason: impl Into<String>) -> Self {
        BoundAudit {
            theorem,
            instance,
            status: AuditStatus::NotApplicable(reason.into()),
            quantities: BTreeMap::new(),
            check: None,
            methods: Vec::new(),
        }
    }

    pub fn is_applicable(&self) -> bool {
        self.status == AuditStatus::Applicable
    }

    pub fn pass(&self) -> bool {
        self.check.is_some_and(|c| c.holds())
    }

    pub fn tight_lower(&self) -> bool {
        self.check.is_some_and(|c| c.tight_lower())
    }

    pub fn tight_upper(&self) -> bool {
        self.check.is_some_and(|c| c.tight_upper())
    }

    pub fn quantity(&self, key: &str) -> Option<i64> {
        self.quantities.get(key).copied()
    }

    pub fn outcome(&self) -> Status {
        match (&self.status, self.pass()) {
            (AuditStatus::NotApplicable(_), _) => Status::NotApplicable,
            (AuditStatus::Applicable, true) => Status::Pass,
            (AuditStatus::Applicable, false) => Status::Fail,
        }
    }

    pub fn to_record(&self) -> ReportRecord {
        let mut r = ReportRecord::new(self.theorem.as_str(), &self.instance, self.outcome());
        if let AuditStatus::NotApplicable(reason) = &self.status {
            r.reason = Some(reason.clone());
        }
        for (k, &v) in &self.quantities {
            r = r.with(k, v);
        }
        if let Some(c) = self.check {
            r = r
                .with("lower", c.lower)
                .with("middle", c.middle)
                .with("upper", c.upper)
                .with("slack_lower", c.middle - c.lower)
                .with("slack_upper", c.upper - c.middle);
        }
        r.tight_lower = self.tight_lower();
        r.tight_upper = self.tight_upper();
        r.method = method_label(&self.methods);
        r
    }
}

fn method_label(methods: &[Method]) -> Option<String> {
    let mut names: Vec<&str> = methods.iter().map(|m| m.as_str()).collect();
    names.sort_unstable();
    names.dedup();
    (!names.is_empty()).then(|| names.join("+"))
}

/// Strong domination number with the method that produced it.
pub(crate) fn gamma_st(g: &Graph, config: &SolverConfig) -> Result<(i64, Method)> {
    let r = solver::solve(g, DominationMode::Strong, config)?;
    Ok((r.gamma as i64, r.method))
}

/// Short label for an unnamed graph: its graph6 string.
pub fn describe(g: &Graph) -> String {
    format!("g6:{}", crate::formats::graph6::write(g))
}
