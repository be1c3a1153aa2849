//! On-disk formats: edge-list text, graph6, and JSON-lines reports.

pub mod edge_list;
pub mod graph6;
pub mod report;

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    /// `el`
    EdgeList,
    /// `g6`
    Graph6,
}

impl GraphFormat {
    pub fn parse(self, text: &str) -> Result<Graph> {
        match self {
            GraphFormat::EdgeList => edge_list::parse(text),
            GraphFormat::Graph6 => graph6::parse(text),
        }
    }

    pub fn write(self, g: &Graph) -> String {
        match self {
            GraphFormat::EdgeList => edge_list::write(g),
            GraphFormat::Graph6 => {
                let mut s = graph6::write(g);
                s.push('\n');
                s
            }
        }
    }

    /// Guesses from a file extension: `.g6` is graph6, anything else edge-list.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "el" => Ok(GraphFormat::EdgeList),
            "g6" => Ok(GraphFormat::Graph6),
            _ => Err(Error::Lookup {
                kind: "graph format",
                id: s.to_string(),
            }),
        }
    }
}
