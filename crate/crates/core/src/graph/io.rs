//! Graph ingestion: plain edge lists, DIMACS `.col`, and edge-order files.
//!
//! Edge-list files hold one `u v` pair per line; a line with a single token
//! declares an isolated vertex; `#` starts a comment. Labels are arbitrary
//! tokens. They are mapped to dense indices in ascending order, numerically
//! when every label is an integer and lexicographically otherwise.

use std::collections::{BTreeSet, HashMap};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `labels[v]` is the external name of vertex `v`.
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Applies an edge-order file: every edge listed once, ascending.
    pub fn with_edge_order(&self, text: &str) -> Result<LabeledGraph> {
        let pairs = parse_pairs(text)?;
        let mut order = Vec::with_capacity(pairs.len());
        for (line, a, b) in pairs {
            let (Some(x), Some(y)) = (self.index_of(&a), self.index_of(&b)) else {
                return Err(Error::Parse { line, msg: format!("unknown vertex in `{a} {b}`") });
            };
            let Some(id) = self.graph.edge_id(x, y) else {
                return Err(Error::Parse { line, msg: format!("`{a} {b}` is not an edge") });
            };
            order.push(id);
        }
        let graph = self.graph.with_edge_order(&order)?;
        Ok(LabeledGraph { graph, labels: self.labels.clone() })
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn parse_pairs(text: &str) -> Result<Vec<(usize, String, String)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let toks: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [a, b] => out.push((i + 1, a.to_string(), b.to_string())),
            _ => {
                return Err(Error::Parse { line: i + 1, msg: "expected `u v`".into() });
            }
        }
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut labels = BTreeSet::new();
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let toks: Vec<&str> = strip_comment(raw).split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [a] => {
                labels.insert(a.to_string());
            }
            [a, b] => {
                labels.insert(a.to_string());
                labels.insert(b.to_string());
                pairs.push((i + 1, a.to_string(), b.to_string()));
            }
            _ => return Err(Error::Parse { line: i + 1, msg: "expected `u v` or `u`".into() }),
        }
    }
    let mut labels: Vec<String> = labels.into_iter().collect();
    if labels.iter().all(|l| l.parse::<i64>().is_ok()) {
        labels.sort_by_key(|l| l.parse::<i64>().unwrap());
    }
    let index: HashMap<&str, usize> =
        labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut edges = Vec::with_capacity(pairs.len());
    for (line, a, b) in &pairs {
        let e = (index[a.as_str()], index[b.as_str()]);
        if e.0 == e.1 {
            return Err(Error::Parse { line: *line, msg: format!("self-loop on `{a}`") });
        }
        edges.push(e);
    }
    let graph = Graph::new(labels.len(), &edges).map_err(|e| Error::Parse {
        line: 0,
        msg: e.to_string(),
    })?;
    Ok(LabeledGraph { graph, labels })
}

/// DIMACS `.col`: `c` comments, one `p edge n m` header, `e u v` lines with
/// 1-based vertices.
pub fn parse_dimacs(text: &str) -> Result<LabeledGraph> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        let bad = |msg: &str| Error::Parse { line, msg: msg.to_string() };
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(bad("duplicate `p` line"));
                }
                if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                    return Err(bad("expected `p edge n m`"));
                }
                n = Some(toks[2].parse().map_err(|_| bad("bad vertex count"))?);
                declared_m = toks[3].parse().map_err(|_| bad("bad edge count"))?;
            }
            Some("e") => {
                let nv = n.ok_or_else(|| bad("`e` line before `p` line"))?;
                if toks.len() != 3 {
                    return Err(bad("expected `e u v`"));
                }
                let u: usize = toks[1].parse().map_err(|_| bad("bad vertex"))?;
                let v: usize = toks[2].parse().map_err(|_| bad("bad vertex"))?;
                if u == 0 || v == 0 || u > nv || v > nv {
                    return Err(bad("vertex out of range"));
                }
                edges.push((u - 1, v - 1));
            }
            Some(_) => return Err(bad("unknown line type")),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing `p` line".into() })?;
    if edges.len() != declared_m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header declares {declared_m} edges, found {}", edges.len()),
        });
    }
    let graph =
        Graph::new(n, &edges).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    let labels = (1..=n).map(|v| v.to_string()).collect();
    Ok(LabeledGraph { graph, labels })
}
