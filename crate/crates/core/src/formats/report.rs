//! JSON-lines reports: one [`ReportRecord`] per line.
//!
//! Numbers are integers or exact rationals written as `"p/q"` strings; no
//! floats appear anywhere. Keys are emitted in a fixed order so that equal
//! runs produce byte-identical files.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    /// Informational lines: run headers, solve results, summaries.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(i64),
    /// Exact rational as `"p/q"`.
    Rational(String),
}

impl Quantity {
    pub fn ratio(r: Ratio<i64>) -> Self {
        Quantity::Rational(format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Quantity::Int(v) => Some(*v),
            Quantity::Rational(_) => None,
        }
    }

    pub fn as_ratio(&self) -> Option<Ratio<i64>> {
        match self {
            Quantity::Int(v) => Some(Ratio::from_integer(*v)),
            Quantity::Rational(s) => {
                let (p, q) = s.split_once('/')?;
                let q: i64 = q.parse().ok()?;
                if q == 0 {
                    return None;
                }
                Some(Ratio::new(p.parse().ok()?, q))
            }
        }
    }
}

impl From<i64> for Quantity {
    fn from(v: i64) -> Self {
        Quantity::Int(v)
    }
}

impl From<usize> for Quantity {
    fn from(v: usize) -> Self {
        Quantity::Int(v as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema: u32,
    /// Theorem id, or `solve`, `run-header`, `summary`, `search` for non-audit lines.
    pub theorem: String,
    pub instance: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub quantities: BTreeMap<String, Quantity>,
    #[serde(default)]
    pub tight_lower: bool,
    #[serde(default)]
    pub tight_upper: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witness: Vec<usize>,
}

impl ReportRecord {
    pub fn new(theorem: impl Into<String>, instance: impl Into<String>, status: Status) -> Self {
        ReportRecord {
            schema: SCHEMA_VERSION,
            theorem: theorem.into(),
            instance: instance.into(),
            status,
            reason: None,
            quantities: BTreeMap::new(),
            tight_lower: false,
            tight_upper: false,
            method: None,
            witness: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Quantity>) -> Self {
        self.quantities.insert(key.to_string(), value.into());
        self
    }

    pub fn quantity(&self, key: &str) -> Option<i64> {
        self.quantities.get(key).and_then(Quantity::as_int)
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("report records always serialise")
    }
}

pub fn emit<'a, W: Write>(
    records: impl IntoIterator<Item = &'a ReportRecord>,
    mut out: W,
) -> std::io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_line())?;
    }
    Ok(())
}

pub fn emit_to_string<'a>(records: impl IntoIterator<Item = &'a ReportRecord>) -> String {
    let mut buf = Vec::new();
    emit(records, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

/// Reads records back. Blank lines are skipped; anything else that is not a
/// record is an error naming its 1-based line.
pub fn load<R: BufRead>(input: R) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| Error::parse(i + 1, e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(&line).map_err(|e| Error::parse(i + 1, e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}

pub fn load_str(text: &str) -> Result<Vec<ReportRecord>> {
    load(text.as_bytes())
}
