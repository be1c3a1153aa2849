//! graph6: the size `N(n)` followed by the upper triangle of the adjacency
//! matrix, column by column (`(0,1), (0,2), (1,2), (0,3), …`), packed six
//! bits per byte with 63 added to each byte.
//!
//! `N(n)` is one byte for `n <= 62`, `~` plus three bytes for
//! `n <= 258047`, and `~~` plus six bytes above that. Decoding is strict: the
//! size must use its shortest form, padding bits must be zero, and nothing may
//! follow the last byte apart from one optional newline.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

const BIAS: u8 = 63;
const MAX_N: usize = (1 << 36) - 1;

/// ```
/// use stdom::formats::graph6;
/// let k2 = graph6::parse("A_").unwrap();
/// assert_eq!((k2.n(), k2.m()), (2, 1));
/// assert_eq!(graph6::write(&k2), "A_");
/// ```
pub fn parse(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(
            1,
            format!("byte {} at offset {pos} outside 63..=126", bytes[pos]),
        ));
    }
    let (n, header) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < body_len {
        return Err(Error::parse(
            1,
            format!(
                "truncated: {n} vertices need {body_len} adjacency bytes, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > body_len {
        return Err(Error::parse(1, "trailing data after adjacency bytes"));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body_len - 1] - BIAS;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::parse(1, "nonzero padding bits"));
        }
    }
    Graph::new(n, edges).map_err(|e| Error::parse(1, e.to_string()))
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let field = |from: usize, count: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| Error::parse(1, "truncated size prefix"))?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - BIAS) as usize))
    };
    match bytes {
        [] => Err(Error::parse(1, "empty graph6 string")),
        [126, 126, ..] => {
            let n = field(2, 6)?;
            if n <= 258047 {
                return Err(Error::parse(1, "size prefix is not in shortest form"));
            }
            Ok((n, 8))
        }
        [126, ..] => {
            let n = field(1, 3)?;
            if n <= 62 {
                return Err(Error::parse(1, "size prefix is not in shortest form"));
            }
            Ok((n, 4))
        }
        [b, ..] => Ok(((b - BIAS) as usize, 1)),
    }
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    assert!(n <= MAX_N, "graph6 cannot encode {n} vertices");
    let push = |out: &mut Vec<u8>, count: usize| {
        for i in (0..count).rev() {
            out.push(((n >> (6 * i)) & 63) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258047 {
        out.push(126);
        push(out, 3);
    } else {
        out.extend([126, 126]);
        push(out, 6);
    }
}

/// The unique graph6 string of `g` under its current labelling, without a
/// trailing newline.
pub fn write(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
