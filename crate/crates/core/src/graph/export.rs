//! DOT and JSON serialization of graphs.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::SimpleGraph;
use crate::error::{Error, Result};

/// JSON shape: `{"n": int, "labels": [...], "edges": [[i, j], ...]}` with
/// `i < j`, edges sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl From<&SimpleGraph> for GraphJson {
    fn from(g: &SimpleGraph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            labels: g.labels().to_vec(),
            edges: g.edges().into_iter().map(|(i, j)| [i, j]).collect(),
        }
    }
}

pub fn to_json(g: &SimpleGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("graph json serializes")
}

pub fn from_json(text: &str) -> Result<SimpleGraph> {
    let data: GraphJson =
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("graph json: {e}")))?;
    if data.labels.len() != data.n {
        return Err(Error::InvalidArgument(format!(
            "graph json: {} labels for {} vertices",
            data.labels.len(),
            data.n
        )));
    }
    let mut g = SimpleGraph::with_labels(data.labels);
    for [i, j] in data.edges {
        if i >= data.n || j >= data.n || i == j {
            return Err(Error::InvalidArgument(format!("graph json: bad edge [{i},{j}]")));
        }
        g.add_edge(i, j);
    }
    Ok(g)
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v} [label={}];", quote(g.label(v))).unwrap();
    }
    for (i, j) in g.edges() {
        writeln!(out, "  {i} -- {j};").unwrap();
    }
    out.push_str("}\n");
    out
}
