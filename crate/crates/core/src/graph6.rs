//! The graph6 interchange format for simple undirected graphs.
//!
//! One graph per line of printable bytes in `63..=126`. The vertex count is
//! one byte `n + 63` for `n <= 62`, or byte 126 followed by a 3-byte base-64
//! value for `63 <= n <= 258047`. The upper-triangle adjacency bits follow in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, zero-padded to a
//! multiple of 6, each 6-bit group emitted as `value + 63`. Parsing is
//! strict (no stray padding bits, no trailing bytes), so parse and emit are
//! exact inverses.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    ByteRange { pos: usize, byte: u8 },
    #[error("truncated graph6 data: need {need} adjacency bytes, found {found}")]
    Truncated { need: usize, found: usize },
    #[error("{0} trailing bytes after adjacency data")]
    TrailingGarbage(usize),
    #[error("padding bits are not zero")]
    NonzeroPadding,
    #[error("extended vertex count {0} is below 63, not canonical")]
    NonCanonicalCount(usize),
    #[error("8-byte vertex counts are not supported")]
    CountTooWide,
    #[error("empty graph6 line")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decodes one graph6 line; an optional `>>graph6<<` header is stripped.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let data = line.strip_prefix(HEADER).unwrap_or(line);
    if data.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in data.iter().enumerate() {
        if !(OFFSET..=126).contains(&byte) {
            return Err(Graph6Error::ByteRange { pos, byte });
        }
    }

    let (n, body) = if data[0] != 126 {
        ((data[0] - OFFSET) as usize, &data[1..])
    } else {
        if data.len() < 4 {
            return Err(Graph6Error::Truncated { need: 4, found: data.len() });
        }
        if data[1] == 126 {
            return Err(Graph6Error::CountTooWide);
        }
        let n = ((data[1] - OFFSET) as usize) << 12
            | ((data[2] - OFFSET) as usize) << 6
            | (data[3] - OFFSET) as usize;
        if n < 63 {
            return Err(Graph6Error::NonCanonicalCount(n));
        }
        (n, &data[4..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::Graph(GraphError::VertexCount(n)));
    }

    let bits = n * (n - 1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < need {
        return Err(Graph6Error::Truncated { need, found: body.len() });
    }
    if body.len() > need {
        return Err(Graph6Error::TrailingGarbage(body.len() - need));
    }

    let mut g = Graph::empty(n)?;
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let value = body[pos / 6] - OFFSET;
            if value >> (5 - pos % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            pos += 1;
        }
    }
    // the pad bits after the last adjacency bit must be zero
    if need > 0 {
        let tail = body[need - 1] - OFFSET;
        let pad = need * 6 - bits;
        if tail & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Encodes a graph as one graph6 line (without newline).
pub fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    out
}
