//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v
//! ...
//! ```
//!
//! The writer emits edges as `u v` with `u < v` in lexicographic order. The
//! reader accepts the edges in any order and either orientation.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (a, b) = parse_pair(line, line_no)?;
        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(parse_err(line_no, format!("more than the declared {m} edges")));
                }
                if a == b {
                    return Err(parse_err(line_no, Error::SelfLoop(a).to_string()));
                }
                if let Some(w) = [a, b].into_iter().find(|&w| w >= n) {
                    let e = Error::VertexOutOfRange { vertex: w, n };
                    return Err(parse_err(line_no, e.to_string()));
                }
                edges.push((a, b, line_no));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(last_line.max(1), "missing \"n m\" header".into()))?;
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::from_edges(&pairs, n).map_err(|e| {
        // point at the offending line for duplicates
        let line = match e {
            Error::DuplicateEdge(u, v) => edges
                .iter()
                .filter(|&&(a, b, _)| (a.min(b), a.max(b)) == (u, v))
                .nth(1)
                .map(|&(_, _, l)| l)
                .unwrap_or(last_line),
            _ => last_line,
        };
        parse_err(line, e.to_string())
    })
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn parse_pair(line: &str, line_no: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("invalid integer {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = it.next() {
        return Err(parse_err(line_no, format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

fn parse_err(line: usize, msg: String) -> Error {
    Error::Parse { line, msg }
}
