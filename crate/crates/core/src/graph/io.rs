//! The plain-text edge-list format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};
use thiserror::Error;

use super::{Graph, MAX_ORDER};

/// Edge-list parse failures. Line numbers are 1-based and count every
/// physical line, comments included.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `n m` header")]
    MissingHeader,
    #[error("line {line}: malformed header `{text}`")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: order {order} exceeds the limit of {MAX_ORDER}")]
    OrderTooLarge { line: usize, order: usize },
    #[error("line {line}: malformed edge `{text}`")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { line: usize, vertex: usize, order: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCountMismatch { expected: usize, found: usize },
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match *self {
            ParseError::MalformedHeader { line, .. }
            | ParseError::OrderTooLarge { line, .. }
            | ParseError::MalformedEdge { line, .. }
            | ParseError::VertexOutOfRange { line, .. }
            | ParseError::SelfLoop { line, .. }
            | ParseError::DuplicateEdge { line, .. } => Some(line),
            ParseError::MissingHeader | ParseError::EdgeCountMismatch { .. } => None,
        }
    }
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let mut it = text.split_ascii_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

/// Parses the edge-list format. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (order, expected) =
        parse_pair(header).ok_or_else(|| ParseError::MalformedHeader { line, text: header.to_owned() })?;
    if order > MAX_ORDER {
        return Err(ParseError::OrderTooLarge { line, order });
    }
    let mut graph = Graph::empty(order).expect("order checked");

    let mut found = 0;
    for (line, text) in lines {
        let (u, v) = parse_pair(text).ok_or_else(|| ParseError::MalformedEdge { line, text: text.to_owned() })?;
        if let Some(&vertex) = [u, v].iter().find(|&&x| x >= order) {
            return Err(ParseError::VertexOutOfRange { line, vertex, order });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if graph.has_edge(u, v) {
            return Err(ParseError::DuplicateEdge { line, u: u.min(v), v: u.max(v) });
        }
        graph.add_edge(u, v).expect("edge checked");
        found += 1;
    }
    if found != expected {
        return Err(ParseError::EdgeCountMismatch { expected, found });
    }
    Ok(graph)
}

impl Graph {
    /// Serializes in the canonical edge-list form: header, then the edges
    /// in lexicographic order, each line newline-terminated.
    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.order(), self.edge_count())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// JSON form: `{"order": n, "edges": [[u, v], ..]}`.
impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("edges", &self.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>())?;
        st.end()
    }
}
