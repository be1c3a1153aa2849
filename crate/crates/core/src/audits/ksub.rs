use std::fmt;

use serde::{Deserialize, Serialize};

use super::formulas::{ksub_pendant_upper, ksub_value};
use super::{describe, gamma_st, TheoremId};
use crate::error::{Error, Result};
use crate::formats::report::{ReportRecord, Status};
use crate::graph::Graph;
use crate::solver::{Method, SolverConfig};
use crate::transforms::k_subdivision;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KSubKind {
    /// `δ ≥ 3`: the value is claimed exactly.
    Exact,
    /// `δ ≥ 2`: the same expression as an upper bound.
    Upper,
    /// `1 ≤ t ≤ n - 1` pendant vertices: the pendant-aware upper bound.
    PendantUpper,
}

impl KSubKind {
    pub fn theorem(self) -> TheoremId {
        match self {
            KSubKind::Exact => TheoremId::KsubExact,
            KSubKind::Upper => TheoremId::KsubUpper,
            KSubKind::PendantUpper => TheoremId::KsubPendant,
        }
    }
}

impl fmt::Display for KSubKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.theorem().as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSubAudit {
    pub instance: String,
    pub kind: KSubKind,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub min_degree: usize,
    pub pendants: usize,
    pub predicted: usize,
    pub solved: usize,
    pub method: Method,
}

impl KSubAudit {
    pub fn pass(&self) -> bool {
        match self.kind {
            KSubKind::Exact => self.solved == self.predicted,
            KSubKind::Upper | KSubKind::PendantUpper => self.solved <= self.predicted,
        }
    }

    pub fn tight(&self) -> bool {
        self.solved == self.predicted
    }

    pub fn to_record(&self) -> ReportRecord {
        let status = if self.pass() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut r = ReportRecord::new(self.kind.theorem().as_str(), &self.instance, status)
            .with("n", self.n)
            .with("m", self.m)
            .with("k", self.k)
            .with("min_degree", self.min_degree)
            .with("pendants", self.pendants)
            .with("predicted", self.predicted)
            .with("gamma_ksub", self.solved);
        r.tight_upper = self.tight();
        r.tight_lower = self.kind == KSubKind::Exact && self.tight();
        r.method = Some(self.method.as_str().to_string());
        r
    }
}

/// Every k-subdivision check whose precondition `G` meets, sharing one solve
/// of `G^{1/k}`. An empty result means no precondition holds.
pub fn audit_ksub(g: &Graph, k: usize, config: &SolverConfig) -> Result<Vec<KSubAudit>> {
    audit_ksub_named(g, k, &describe(g), config)
}

pub fn audit_ksub_named(
    g: &Graph,
    k: usize,
    label: &str,
    config: &SolverConfig,
) -> Result<Vec<KSubAudit>> {
    if k < 2 {
        return Err(Error::validation(format!(
            "k-subdivision audits need k >= 2, got {k}"
        )));
    }
    let stats = g.stats()?;
    let (n, m, t) = (g.n(), g.m(), stats.pendants);
    let mut kinds = Vec::new();
    if stats.min_degree >= 3 {
        kinds.push((KSubKind::Exact, ksub_value(n, m, k)?));
    }
    if stats.min_degree >= 2 {
        kinds.push((KSubKind::Upper, ksub_value(n, m, k)?));
    }
    if t >= 1 && t < n && t <= m {
        kinds.push((KSubKind::PendantUpper, ksub_pendant_upper(n, m, t, k)?));
    }
    if kinds.is_empty() {
        return Ok(Vec::new());
    }
    let (sub, _) = k_subdivision(g, k)?;
    let (solved, method) = gamma_st(&sub, config)?;
    Ok(kinds
        .into_iter()
        .map(|(kind, predicted)| KSubAudit {
            instance: format!("{label} k={k}"),
            kind,
            n,
            m,
            k,
            min_degree: stats.min_degree,
            pendants: t,
            predicted,
            solved: solved as usize,
            method,
        })
        .collect())
}

/// Record for a graph meeting none of the k-subdivision preconditions.
pub fn ksub_not_applicable(g: &Graph, k: usize) -> ReportRecord {
    let mut r = ReportRecord::new(
        "ksub",
        format!("{} k={k}", describe(g)),
        Status::NotApplicable,
    );
    r.reason = Some("min degree below 2 and no pendant count in 1..n-1".to_string());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path};

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn k4_is_exact_and_upper() {
        let audits = audit_ksub(&complete(4).unwrap(), 2, &cfg()).unwrap();
        let kinds: Vec<_> = audits.iter().map(|a| a.kind).collect();
        assert_eq!(kinds, vec![KSubKind::Exact, KSubKind::Upper]);
        assert!(audits
            .iter()
            .all(|a| a.predicted == 4 && a.solved == 4 && a.pass()));
    }

    #[test]
    fn c5_halved_is_strictly_below() {
        let audits = audit_ksub(&cycle(5).unwrap(), 2, &cfg()).unwrap();
        assert_eq!(audits.len(), 1);
        let a = &audits[0];
        assert_eq!((a.kind, a.predicted, a.solved), (KSubKind::Upper, 5, 4));
        assert!(a.pass() && !a.tight());
    }

    #[test]
    fn p4_pendant_bound() {
        let audits = audit_ksub(&path(4).unwrap(), 6, &cfg()).unwrap();
        assert_eq!(audits.len(), 1);
        let a = &audits[0];
        assert_eq!(
            (a.kind, a.predicted, a.solved),
            (KSubKind::PendantUpper, 7, 7)
        );
        assert!(a.pass() && a.tight());
        assert_eq!(a.to_record().theorem, "ksub-pendant");
    }

    #[test]
    fn nothing_applies_to_k2_or_isolated() {
        assert!(audit_ksub(&complete(2).unwrap(), 3, &cfg())
            .unwrap()
            .is_empty());
        assert!(audit_ksub(&Graph::empty(3), 3, &cfg()).unwrap().is_empty());
        assert!(audit_ksub(&cycle(4).unwrap(), 1, &cfg()).is_err());
    }
}
