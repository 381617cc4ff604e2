//! Text formats for graphs: graph6 lines and plain edge lists.
//!
//! An edge list holds the vertex count on its first line followed by one
//! `u v` pair per line. Blank lines and `#` comments are ignored.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::EdgeList => "edgelist",
        })
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

/// A graph together with the format it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub graph: Graph,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn edge_list_error(line: usize, message: impl Into<String>) -> Error {
    Error::EdgeList { line, message: message.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| edge_list_error(1, "missing vertex count"))?;
    let n: usize = header.parse().map_err(|_| edge_list_error(first, format!("bad vertex count `{header}`")))?;
    let mut edges = Vec::new();
    for (line, body) in lines {
        let mut fields = body.split_whitespace().map(str::parse::<usize>);
        match (fields.next(), fields.next(), fields.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(edge_list_error(line, format!("expected `u v`, got `{body}`"))),
        }
    }
    Graph::from_edge_list(n, edges)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads either format: a first content line of decimal digits means an edge list.
pub fn read_graph(text: &str) -> Result<GraphDocument> {
    let first = content_lines(text).next().map(|(_, l)| l).unwrap_or("");
    if !first.is_empty() && first.bytes().all(|b| b.is_ascii_digit()) {
        Ok(GraphDocument { format: GraphFormat::EdgeList, graph: parse_edge_list(text)? })
    } else {
        let line = text.trim();
        Ok(GraphDocument { format: GraphFormat::Graph6, graph: parse_graph6(line)? })
    }
}

/// Serializes in `format`; graph6 output carries no trailing newline.
pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::Graph6 => emit_graph6(g),
        GraphFormat::EdgeList => Ok(emit_edge_list(g)),
    }
}
