//! Instance files.
//!
//! ```text
//! dhp v1
//! A 2 B 2
//! #@ generator=c4
//! 0 0
//! 0 1
//! 1 0
//! 1 1
//! ```
//!
//! Indices are 0-based, `#` starts a comment and `#@ key=value` lines carry
//! metadata. A JSON object with the same fields is accepted on input:
//! `{"format": "dhp v1", "a": 2, "b": 2, "edges": [[0, 0], ...], "meta": {}}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

pub const FORMAT_VERSION: &str = "dhp v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: BipartiteGraph,
    pub meta: BTreeMap<String, String>,
}

impl Instance {
    pub fn new(graph: BipartiteGraph) -> Self {
        Instance { graph, meta: BTreeMap::new() }
    }

    pub fn with_meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Parse either the line format or the JSON variant.
pub fn parse_instance(text: &str) -> Result<Instance> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_lines(text)
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number(line: usize, (column, token): (usize, &str), what: &str) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, column, format!("expected {what}, found {token:?}")))
}

fn parse_lines(text: &str) -> Result<Instance> {
    let mut meta = BTreeMap::new();
    let mut header_seen = false;
    let mut counts: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        if let Some(rest) = raw.trim_start().strip_prefix("#@") {
            let column = raw.len() - raw.trim_start().len() + 3;
            let (key, value) = rest
                .split_once('=')
                .ok_or_else(|| parse_error(line_no, column, "metadata needs key=value"))?;
            let key = key.trim();
            if key.is_empty() {
                return Err(parse_error(line_no, column, "empty metadata key"));
            }
            meta.insert(key.to_string(), value.trim().to_string());
            continue;
        }
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        if toks.is_empty() {
            continue;
        }
        if !header_seen {
            if toks.len() != 2 || toks[0].1 != "dhp" || toks[1].1 != "v1" {
                return Err(parse_error(line_no, toks[0].0, format!("expected header {FORMAT_VERSION:?}")));
            }
            header_seen = true;
            continue;
        }
        let Some((a_count, b_count)) = counts else {
            if toks.len() != 4 || toks[0].1 != "A" || toks[2].1 != "B" {
                return Err(parse_error(line_no, toks[0].0, "expected \"A <n> B <m>\""));
            }
            let a = number(line_no, toks[1], "A count")?;
            let b = number(line_no, toks[3], "B count")?;
            if a > crate::graph::MAX_A {
                return Err(parse_error(line_no, toks[1].0, format!("A count {a} exceeds {}", crate::graph::MAX_A)));
            }
            counts = Some((a, b));
            continue;
        };
        if toks.len() != 2 {
            let column = toks.get(2).map_or(toks[0].0, |t| t.0);
            return Err(parse_error(line_no, column, "expected \"<a> <b>\""));
        }
        let a = number(line_no, toks[0], "A index")?;
        let b = number(line_no, toks[1], "B index")?;
        if a >= a_count {
            return Err(parse_error(line_no, toks[0].0, format!("A index {a} out of range 0..{a_count}")));
        }
        if b >= b_count {
            return Err(parse_error(line_no, toks[1].0, format!("B index {b} out of range 0..{b_count}")));
        }
        if !seen.insert((a, b)) {
            return Err(parse_error(line_no, toks[0].0, format!("duplicate edge {a} {b}")));
        }
        edges.push((a, b));
    }
    if !header_seen {
        return Err(parse_error(last_line.max(1), 1, format!("missing header {FORMAT_VERSION:?}")));
    }
    let (a_count, b_count) = counts.ok_or_else(|| parse_error(last_line.max(1), 1, "missing \"A <n> B <m>\" line"))?;
    let graph = BipartiteGraph::from_edge_list(a_count, b_count, &edges)?;
    Ok(Instance { graph, meta })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonInstance {
    format: String,
    a: usize,
    b: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    meta: BTreeMap<String, serde_json::Value>,
}

fn parse_json(text: &str) -> Result<Instance> {
    let raw: JsonInstance =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    if raw.format != FORMAT_VERSION {
        return Err(parse_error(1, 1, format!("unsupported format {:?}", raw.format)));
    }
    if raw.a > crate::graph::MAX_A {
        return Err(parse_error(1, 1, format!("A count {} exceeds {}", raw.a, crate::graph::MAX_A)));
    }
    let graph = BipartiteGraph::from_edge_list(raw.a, raw.b, &raw.edges)?;
    let meta = raw
        .meta
        .into_iter()
        .map(|(k, v)| {
            let v = match v {
                serde_json::Value::String(s) => s,
                other => other.to_string(),
            };
            (k, v)
        })
        .collect();
    Ok(Instance { graph, meta })
}

/// Canonical text: header, counts, metadata sorted by key, edges sorted.
pub fn emit_instance(instance: &Instance) -> String {
    let g = &instance.graph;
    let mut out = format!("{FORMAT_VERSION}\nA {} B {}\n", g.a_count(), g.b_count());
    for (k, v) in &instance.meta {
        out.push_str(&format!("#@ {k}={v}\n"));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

pub fn emit_graph(g: &BipartiteGraph) -> String {
    emit_instance(&Instance::new(g.clone()))
}
