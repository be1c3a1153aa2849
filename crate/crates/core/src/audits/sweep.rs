use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::{EdgeAuditor, TheoremId};
use crate::error::Result;
use crate::formats::report::{ReportRecord, Status};
use crate::graph::Graph;
use crate::solver::SolverConfig;

/// Runs the requested edge theorems on every edge of every graph.
///
/// Graphs are audited in parallel; records come back grouped by graph in input
/// order, then by edge, then in the order of `theorems`.
pub fn audit_all_edges(
    graphs: &[(String, Graph)],
    theorems: &[TheoremId],
    config: &SolverConfig,
) -> Result<Vec<ReportRecord>> {
    let per_graph: Vec<Vec<ReportRecord>> = graphs
        .par_iter()
        .map(|(label, g)| {
            let auditor = EdgeAuditor::new(g, config)?.named(label.clone());
            let mut out = Vec::new();
            for &e in g.edges() {
                out.extend(auditor.records(e, theorems)?);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_graph.into_iter().flatten().collect())
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TheoremTally {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub tight_lower: usize,
    pub tight_upper: usize,
}

impl TheoremTally {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.not_applicable
    }
}

/// Per-theorem counts over a batch of records.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub theorems: BTreeMap<String, TheoremTally>,
}

impl SweepSummary {
    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a ReportRecord>) -> Self {
        let mut s = SweepSummary::default();
        for r in records {
            s.add(r);
        }
        s
    }

    pub fn add(&mut self, r: &ReportRecord) {
        let t = self.theorems.entry(r.theorem.clone()).or_default();
        match r.status {
            Status::Pass => t.pass += 1,
            Status::Fail => t.fail += 1,
            Status::NotApplicable => t.not_applicable += 1,
            Status::Info => return,
        }
        t.tight_lower += usize::from(r.tight_lower);
        t.tight_upper += usize::from(r.tight_upper);
    }

    pub fn failures(&self) -> usize {
        self.theorems.values().map(|t| t.fail).sum()
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<20} {:>8} {:>6} {:>6} {:>11} {:>11}",
            "theorem", "pass", "fail", "n/a", "tight-lower", "tight-upper"
        )?;
        for (name, t) in &self.theorems {
            writeln!(
                f,
                "{:<20} {:>8} {:>6} {:>6} {:>11} {:>11}",
                name, t.pass, t.fail, t.not_applicable, t.tight_lower, t.tight_upper
            )?;
        }
        Ok(())
    }
}
