//! Edge-list text format and its JSON mirror.
//!
//! ```text
//! # comment
//! n 4
//! e 0 1 3/2
//! e 1 2 0.25
//! ```
//!
//! Vertex tokens are normally indices in `0..n`. If any endpoint token is not
//! a non-negative integer, all endpoint tokens are treated as labels and are
//! mapped to dense indices in order of first appearance.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphError, VertexId, WeightedGraph};
use crate::rational::Rational;

/// A parsed graph plus the original vertex labels, when the input used
/// non-numeric labels. `labels[i]` is the label of vertex `i`; vertices the
/// header declares but no edge names are labelled `#i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: WeightedGraph,
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(String, String, Rational)>,
}

#[derive(Debug, Serialize)]
struct GraphJsonOut {
    n: usize,
    edges: Vec<(VertexId, VertexId, Rational)>,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the text format, or the JSON mirror when the first non-blank
/// character is `{`.
pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    parse_graph_labeled(text).map(|p| p.graph)
}

pub fn parse_graph_labeled(text: &str) -> Result<ParsedGraph> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    let mut n: Option<usize> = None;
    // (line, u token, v token, weight)
    let mut records: Vec<(usize, &str, &str, Rational)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields[0] {
            "n" => {
                if n.is_some() {
                    return Err(parse_error(line, "duplicate `n` header"));
                }
                if fields.len() != 2 {
                    return Err(parse_error(line, "expected `n <N>`"));
                }
                let count = fields[1]
                    .parse()
                    .map_err(|_| parse_error(line, format!("bad vertex count {:?}", fields[1])))?;
                n = Some(count);
            }
            "e" => {
                if n.is_none() {
                    return Err(parse_error(line, "edge before `n` header"));
                }
                if fields.len() != 4 {
                    return Err(parse_error(line, "expected `e <u> <v> <weight>`"));
                }
                let weight: Rational = fields[3]
                    .parse()
                    .map_err(|e| parse_error(line, format!("{e}")))?;
                records.push((line, fields[1], fields[2], weight));
            }
            other => return Err(parse_error(line, format!("unknown record type {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_error(text.lines().count().max(1), "missing `n` header"))?;
    let records: Vec<(usize, String, String, Rational)> = records
        .into_iter()
        .map(|(l, u, v, w)| (l, u.to_string(), v.to_string(), w))
        .collect();
    build(n, records)
}

fn parse_json(text: &str) -> Result<ParsedGraph> {
    let value: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| parse_error(e.line(), format!("invalid JSON: {e}")))?;
    let raw: GraphJson = serde_json::from_value(normalize_json_tokens(value))
        .map_err(|e| parse_error(1, format!("invalid graph JSON: {e}")))?;
    // JSON has no line structure; report the 1-based edge record instead.
    let records = raw
        .edges
        .into_iter()
        .enumerate()
        .map(|(i, (u, v, w))| (i + 1, u, v, w))
        .collect();
    build(raw.n, records)
}

/// Vertex ids may be given as JSON numbers or strings; weights as numbers or
/// strings. Turn integer vertex ids into strings so one record type serves.
fn normalize_json_tokens(mut value: serde_json::Value) -> serde_json::Value {
    if let Some(edges) = value.get_mut("edges").and_then(|e| e.as_array_mut()) {
        for edge in edges {
            if let Some(rec) = edge.as_array_mut() {
                for tok in rec.iter_mut().take(2) {
                    if let serde_json::Value::Number(num) = tok {
                        *tok = serde_json::Value::String(num.to_string());
                    }
                }
            }
        }
    }
    value
}

fn build(n: usize, records: Vec<(usize, String, String, Rational)>) -> Result<ParsedGraph> {
    let numeric = records.iter().all(|(_, u, v, _)| {
        [u, v]
            .iter()
            .all(|t| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()))
    });

    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, VertexId> = HashMap::new();
    let mut resolve = |line: usize, tok: &str| -> Result<VertexId> {
        if numeric {
            let vertex: usize = tok
                .parse()
                .map_err(|_| parse_error(line, format!("bad vertex {tok:?}")))?;
            if vertex >= n {
                return Err(parse_error(
                    line,
                    GraphError::VertexOutOfRange { vertex, n }.to_string(),
                ));
            }
            return Ok(vertex);
        }
        if let Some(&id) = index.get(tok) {
            return Ok(id);
        }
        let id = labels.len();
        if id >= n {
            return Err(parse_error(
                line,
                format!(
                    "label {tok:?} is vertex #{} but the header declares n = {n}",
                    id + 1
                ),
            ));
        }
        labels.push(tok.to_string());
        index.insert(tok.to_string(), id);
        Ok(id)
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(records.len());
    for (line, ut, vt, weight) in records {
        let u = resolve(line, &ut)?;
        let v = resolve(line, &vt)?;
        if u == v {
            return Err(parse_error(line, GraphError::Loop(u).to_string()));
        }
        if !weight.is_positive() {
            return Err(parse_error(
                line,
                GraphError::NonPositiveWeight { u, v, weight }.to_string(),
            ));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_error(
                line,
                GraphError::DuplicateEdge(u, v).to_string(),
            ));
        }
        edges.push((u, v, weight));
    }
    let graph = WeightedGraph::new(n, edges)?;
    if !numeric {
        // Declared but never named: isolated vertices.
        labels.extend((labels.len()..n).map(|i| format!("#{i}")));
    }
    Ok(ParsedGraph {
        graph,
        labels: if numeric { None } else { Some(labels) },
    })
}

/// Canonical text form: header, then edges sorted by `(u, v)`.
pub fn serialize_graph(g: &WeightedGraph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {} {}", e.u, e.v, e.weight);
    }
    out
}

pub fn serialize_graph_json(g: &WeightedGraph) -> String {
    let doc = GraphJsonOut {
        n: g.n(),
        edges: g
            .edges()
            .iter()
            .map(|e| (e.u, e.v, e.weight.clone()))
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph JSON is always serializable")
}
