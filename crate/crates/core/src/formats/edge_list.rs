//! Plain edge lists: a header line `n m`, then `m` lines `u v` with 0-based
//! vertex ids. Fields are separated by exactly one space and every line ends
//! in `\n`. The canonical form lists each edge once as `u v` with `u < v`,
//! sorted ascending.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// ```
/// let g = stdom::formats::edge_list::parse("3 2\n0 1\n1 2\n").unwrap();
/// assert_eq!(g.degrees(), vec![1, 2, 1]);
/// assert!(stdom::formats::edge_list::parse("2 1\n0 0\n").is_err());
/// ```
pub fn parse(text: &str) -> Result<Graph> {
    let body = text
        .strip_suffix('\n')
        .ok_or_else(|| Error::parse(text.lines().count().max(1), "missing final newline"))?;
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().expect("split yields at least one item");
    let (n, m) = pair(header).map_err(|msg| Error::parse(1, format!("header: {msg}")))?;

    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut seen = std::collections::HashSet::new();
    for (line, text) in lines {
        if edges.len() == m {
            return Err(Error::parse(
                line,
                format!("more than the declared {m} edges"),
            ));
        }
        let (a, b) = pair(text).map_err(|msg| Error::parse(line, msg))?;
        if a == b {
            return Err(Error::parse(line, format!("loop edge at vertex {a}")));
        }
        if a >= n || b >= n {
            return Err(Error::parse(line, format!("vertex out of range 0..{n}")));
        }
        let e = Edge::new(a, b);
        if !seen.insert(e) {
            return Err(Error::parse(line, format!("duplicate edge {e}")));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            edges.len() + 2,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|e| Error::parse(1, e.to_string()))
}

fn pair(line: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = line
        .split_once(' ')
        .ok_or_else(|| format!("expected two fields in {line:?}"))?;
    Ok((number(a)?, number(b)?))
}

fn number(field: &str) -> std::result::Result<usize, String> {
    let canonical = !field.is_empty()
        && field.bytes().all(|c| c.is_ascii_digit())
        && (field == "0" || !field.starts_with('0'));
    if !canonical {
        return Err(format!("malformed number {field:?}"));
    }
    field
        .parse()
        .map_err(|_| format!("number {field:?} too large"))
}

/// Canonical text form.
pub fn write(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}
