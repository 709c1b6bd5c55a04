//! graph6 reading and writing.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed big-endian into 6-bit groups, each emitted as `group + 63`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = text[start..].trim_end().as_bytes();
    for (i, &c) in bytes.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(parse_err(start + i, format!("byte {c:#04x} outside 63..=126")));
        }
    }
    let (n, header_len) = match bytes {
        [] => return Err(parse_err(start, "empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err(start + 2, "truncated 8-byte size header"));
            }
            (decode_groups(&rest[..6]), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(start + 1, "truncated 4-byte size header"));
            }
            (decode_groups(&rest[..3]), 4)
        }
        [c, ..] => ((*c - 63) as u64, 1),
    };
    let n = n as usize;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let payload = &bytes[header_len..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if payload.len() != expected {
        return Err(parse_err(
            start + header_len + payload.len().min(expected),
            format!("expected {expected} payload bytes for n={n}, found {}", payload.len()),
        ));
    }
    let bit = |k: usize| (payload[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(parse_err(start + header_len + k / 6, "nonzero padding bit"));
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_groups(groups: &[u8]) -> u64 {
    groups.iter().fold(0, |acc, &c| acc << 6 | (c - 63) as u64)
}

/// Encodes a simple graph. Multigraphs are rejected.
pub fn write_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::UnsupportedFormat);
    }
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}

/// Parses every non-empty line of a graph6 document. Errors carry the
/// 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l).map_err(|e| (i + 1, e)))
        .collect()
}
