//! Text serialization of graphs and the label sidecar format.
//!
//! Graph text format: optional `#`-prefixed comment lines anywhere, a first
//! data line `n m`, then exactly `m` lines `u v` with `0 <= u < v < n`,
//! space-separated and newline-terminated. Rendering is canonical (edges
//! ascending), so parse-then-render is byte-identical after comments are
//! stripped.
//!
//! Labels live in a sidecar JSON object mapping node id to label string,
//! with keys in numeric order.

use std::collections::BTreeMap;

use crate::graph::{Graph, GraphError};

/// Parses the graph text format. Comment and blank lines are skipped.
pub fn parse_graph_text(text: &str) -> Result<Graph, GraphError> {
    let mut data_lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_no, header) = data_lines.next().ok_or(GraphError::Parse {
        line: 0,
        message: "missing header line".into(),
    })?;
    let parse_u32 = |line: usize, tok: &str| -> Result<u32, GraphError> {
        tok.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("expected integer, got {tok:?}"),
        })
    };
    let mut parts = header.split_whitespace();
    let n = parse_u32(header_no, parts.next().unwrap_or(""))? as usize;
    let m = parse_u32(
        header_no,
        parts.next().ok_or(GraphError::Parse {
            line: header_no,
            message: "header must be `n m`".into(),
        })?,
    )? as usize;
    if parts.next().is_some() {
        return Err(GraphError::Parse {
            line: header_no,
            message: "header must be exactly `n m`".into(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = data_lines.next().ok_or(GraphError::Parse {
            line: 0,
            message: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let mut parts = line.split_whitespace();
        let u = parse_u32(line_no, parts.next().unwrap_or(""))?;
        let v = parse_u32(
            line_no,
            parts.next().ok_or(GraphError::Parse {
                line: line_no,
                message: "edge line must be `u v`".into(),
            })?,
        )?;
        if parts.next().is_some() {
            return Err(GraphError::Parse {
                line: line_no,
                message: "edge line must be exactly `u v`".into(),
            });
        }
        if u >= v {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("edges must satisfy u < v, got {u} {v}"),
            });
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = data_lines.next() {
        return Err(GraphError::Parse {
            line: line_no,
            message: "trailing data after last edge".into(),
        });
    }
    let g = Graph::build(n, edges)?;
    if g.m() != m {
        return Err(GraphError::Parse {
            line: header_no,
            message: format!("header claims {m} edges but {} are distinct", g.m()),
        });
    }
    Ok(g)
}

/// Renders the canonical text form (no comments; edges ascending).
#[must_use]
pub fn render_graph_text(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.m()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Renders the label sidecar: a JSON object `{"0": label, ...}` with keys in
/// numeric order, pretty-printed with a trailing newline.
#[must_use]
pub fn labels_to_json(labels: &[String]) -> String {
    let map: BTreeMap<u32, &String> =
        labels.iter().enumerate().map(|(i, l)| (i as u32, l)).collect();
    let mut s = serde_json::to_string_pretty(&map).expect("label map serializes");
    s.push('\n');
    s
}

/// Parses a label sidecar. Ids must be exactly the dense range `0..len`.
pub fn labels_from_json(text: &str) -> Result<Vec<String>, GraphError> {
    let map: BTreeMap<u32, String> = serde_json::from_str(text).map_err(|e| GraphError::Parse {
        line: e.line(),
        message: format!("label sidecar: {e}"),
    })?;
    let n = map.len();
    let mut out = Vec::with_capacity(n);
    for (i, (k, v)) in map.into_iter().enumerate() {
        if k as usize != i {
            return Err(GraphError::Parse {
                line: 0,
                message: format!("label ids must be dense 0..{n}, found {k}"),
            });
        }
        out.push(v);
    }
    Ok(out)
}
