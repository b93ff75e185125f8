//! Edge-list text format.
//!
//! ```text
//! 5 5
//! 0 3
//! 1 3
//! ...
//! # label 3 m 0 1
//! ```
//!
//! Line 1 is `n m`, then `m` lines `i j` with `i < j` in ascending order.
//! `# label <v> m <i> <j>` marks vertex `v` as the edge-node of `{i, j}`
//! and `# label <v> v <k>` as original vertex `k`; unlabeled vertices are
//! `Original(v)`. Other `#` lines and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexLabel};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_err(line, format!("expected a number, found `{t}`"))))
        .collect()
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<(usize, usize, VertexLabel)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(rest) = comment.trim().strip_prefix("label") {
                labels.push(parse_label(line, rest)?);
            }
            continue;
        }
        let nums = numbers(line, trimmed)?;
        let Some((n, _)) = header else {
            match nums.as_slice() {
                &[n, m] => header = Some((n, m)),
                _ => return Err(parse_err(line, "malformed header, expected `n m`")),
            }
            continue;
        };
        let &[i, j] = nums.as_slice() else {
            return Err(parse_err(line, "expected an edge `i j`"));
        };
        for v in [i, j] {
            if v >= n {
                return Err(parse_err(line, format!("vertex {v} out of range for n = {n}")));
            }
        }
        if i == j {
            return Err(parse_err(line, format!("self-loop at vertex {i}")));
        }
        let key = (i.min(j), i.max(j));
        if edges.iter().any(|&(e, _)| e == key) {
            return Err(parse_err(line, format!("duplicate edge {} {}", key.0, key.1)));
        }
        edges.push((key, line));
    }
    let Some((n, m)) = header else {
        return Err(parse_err(last_line.max(1), "missing header `n m`"));
    };
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let mut vertex_labels: Vec<VertexLabel> = (0..n).map(VertexLabel::Original).collect();
    for (line, v, label) in labels {
        let slot = vertex_labels
            .get_mut(v)
            .ok_or_else(|| parse_err(line, format!("label for vertex {v} out of range for n = {n}")))?;
        *slot = label;
    }
    Graph::with_labels(vertex_labels, edges.into_iter().map(|(e, _)| e))
}

fn parse_label(line: usize, rest: &str) -> Result<(usize, usize, VertexLabel)> {
    let parts: Vec<&str> = rest.split_whitespace().collect();
    let num = |t: &str| t.parse::<usize>().map_err(|_| parse_err(line, format!("bad label field `{t}`")));
    match parts.as_slice() {
        [v, "v", k] => Ok((line, num(v)?, VertexLabel::Original(num(k)?))),
        [v, "m", i, j] => Ok((line, num(v)?, VertexLabel::edge(num(i)?, num(j)?))),
        _ => Err(parse_err(line, "malformed label, expected `# label <v> v <k>` or `# label <v> m <i> <j>`")),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    for (v, label) in g.labels().iter().enumerate() {
        match *label {
            VertexLabel::Original(k) if k == v => {}
            VertexLabel::Original(k) => {
                let _ = writeln!(out, "# label {v} v {k}");
            }
            VertexLabel::EdgeNode(i, j) => {
                let _ = writeln!(out, "# label {v} m {i} {j}");
            }
        }
    }
    out
}
