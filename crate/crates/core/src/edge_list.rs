//! Plain-text edge lists: a `n <count>` header line, then one `u v` pair per
//! line, 0-based. Emission sorts the edges, so parse and emit are mutually
//! inverse on normalized text.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
}

fn malformed(line: usize, msg: impl Into<String>) -> EdgeListError {
    EdgeListError::Malformed { line, msg: msg.into() }
}

fn graph_err(line: usize, err: GraphError) -> EdgeListError {
    malformed(line, err.to_string())
}

/// Parses one graph from edge-list text. Blank lines are ignored; errors
/// carry 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_no, header) = lines.next().ok_or_else(|| malformed(1, "missing 'n <count>' header"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("n") {
        return Err(malformed(header_no, "header must be 'n <count>'"));
    }
    let n: usize = tokens
        .next()
        .ok_or_else(|| malformed(header_no, "header must be 'n <count>'"))?
        .parse()
        .map_err(|_| malformed(header_no, "vertex count is not a number"))?;
    if tokens.next().is_some() {
        return Err(malformed(header_no, "trailing tokens after header"));
    }
    let mut g = Graph::empty(n).map_err(|e| graph_err(header_no, e))?;

    for (line_no, line) in lines {
        let mut tokens = line.split_whitespace();
        let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(malformed(line_no, "expected 'u v'")),
        };
        let u: usize = u.parse().map_err(|_| malformed(line_no, "endpoint is not a number"))?;
        let v: usize = v.parse().map_err(|_| malformed(line_no, "endpoint is not a number"))?;
        g.add_edge(u, v).map_err(|e| graph_err(line_no, e))?;
    }
    Ok(g)
}

/// Emits a graph as edge-list text with edges in lexicographic order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
