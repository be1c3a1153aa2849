//! The four tree fixtures used as tightness witnesses.
//!
//! Each tree is stored as an edge-list file under `data/fixtures/`, with the
//! marked edge `e = uv` always at `u = 0`, `v = 1`. The remaining labelled
//! vertices are listed in [`Fixture::names`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::edge_list;
use crate::graph::{Edge, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FixtureId {
    /// Deletion upper-bound witness: centres of degree 4 and 5, 84 vertices.
    #[serde(rename = "fig1-G")]
    Fig1G,
    /// Deletion lower-bound witness on 24 vertices.
    #[serde(rename = "fig2-H")]
    Fig2H,
    /// Contraction upper-bound witness on 26 vertices.
    #[serde(rename = "fig3-G")]
    Fig3G,
    /// Contraction lower-bound witness on 30 vertices.
    #[serde(rename = "fig4-H")]
    Fig4H,
}

/// Which edge operation a fixture is meant to exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureRole {
    Deletion,
    Contraction,
}

impl FixtureId {
    pub const ALL: [FixtureId; 4] = [
        FixtureId::Fig1G,
        FixtureId::Fig2H,
        FixtureId::Fig3G,
        FixtureId::Fig4H,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FixtureId::Fig1G => "fig1-G",
            FixtureId::Fig2H => "fig2-H",
            FixtureId::Fig3G => "fig3-G",
            FixtureId::Fig4H => "fig4-H",
        }
    }

    pub fn role(&self) -> FixtureRole {
        match self {
            FixtureId::Fig1G | FixtureId::Fig2H => FixtureRole::Deletion,
            FixtureId::Fig3G | FixtureId::Fig4H => FixtureRole::Contraction,
        }
    }

    fn data(&self) -> &'static str {
        match self {
            FixtureId::Fig1G => include_str!("../data/fixtures/fig1-G.el"),
            FixtureId::Fig2H => include_str!("../data/fixtures/fig2-H.el"),
            FixtureId::Fig3G => include_str!("../data/fixtures/fig3-G.el"),
            FixtureId::Fig4H => include_str!("../data/fixtures/fig4-H.el"),
        }
    }

    fn names(&self) -> &'static [(&'static str, Vertex)] {
        match self {
            FixtureId::Fig1G => &[
                ("u", 0),
                ("v", 1),
                ("u_1", 2),
                ("u_2", 3),
                ("u_3", 4),
                ("v_1", 5),
                ("v_2", 6),
                ("v_3", 7),
                ("v_4", 8),
            ],
            FixtureId::Fig2H => &[
                ("u", 0),
                ("v", 1),
                ("u_1", 2),
                ("v_1", 6),
                ("u_2", 12),
                ("u_3", 13),
                ("u_4", 14),
                ("v_2", 17),
                ("v_3", 18),
            ],
            FixtureId::Fig3G | FixtureId::Fig4H => &[("u", 0), ("v", 1)],
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixtureId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Lookup {
                kind: "fixture",
                id: s.to_string(),
            })
    }
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub id: FixtureId,
    pub graph: Graph,
    pub edge: Edge,
    pub names: &'static [(&'static str, Vertex)],
}

impl Fixture {
    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.names.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

pub fn fixture(id: FixtureId) -> Fixture {
    let graph = edge_list::parse(id.data()).expect("bundled fixture parses");
    Fixture {
        id,
        graph,
        edge: Edge::new(0, 1),
        names: id.names(),
    }
}

/// Looks a fixture up by its textual id (`fig1-G`, `fig2-H`, `fig3-G`, `fig4-H`).
pub fn fixture_by_name(name: &str) -> Result<Fixture> {
    Ok(fixture(name.parse()?))
}
