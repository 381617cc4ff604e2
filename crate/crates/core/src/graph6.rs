//! graph6 short form (`n <= 62`).
//!
//! Byte 0 is `n + 63`. The upper triangle follows in column-major order
//! `(0,1), (0,2), (1,2), (0,3), ..`, six bits per byte, most significant bit
//! first, zero padded, each byte offset by 63.

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count expressible in the short form.
pub const SHORT_FORM_LIMIT: usize = 62;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("long-form graph6 (n > 62) is not supported")]
    LongForm,
    #[error("byte {byte:#04x} at position {position} is outside the printable range 63..=126")]
    CharOutOfRange { position: usize, byte: u8 },
    #[error("graph6 line too short: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage: expected {expected} bytes, found {found}")]
    TrailingGarbage { expected: usize, found: usize },
    #[error("nonzero padding bits in the final byte")]
    NonzeroPadding,
}

fn encoded_len(n: usize) -> usize {
    1 + (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing line break and the optional `>>graph6<<`
/// header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Graph6Error::Empty);
    };
    if first == b'~' {
        return Err(Graph6Error::LongForm);
    }
    if let Some(position) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::CharOutOfRange { position, byte: bytes[position] });
    }
    let n = (first - 63) as usize;
    let expected = encoded_len(n);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: bytes.len() });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingGarbage { expected, found: bytes.len() });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(Graph::from_rows_unchecked(adj))
}

/// Encodes a graph with at most 62 vertices; no header, no line break.
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > SHORT_FORM_LIMIT {
        return Err(Error::Capacity { operation: "graph6 short form", n, limit: SHORT_FORM_LIMIT });
    }
    let mut out = Vec::with_capacity(encoded_len(n));
    out.push(n as u8 + 63);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
