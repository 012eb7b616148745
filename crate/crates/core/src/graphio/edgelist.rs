//! Edge-list text: a header line `n m`, then `m` lines `u v` (0-based).
//! Blank lines and lines starting with `#` are ignored on input.

use std::fmt::Write;

use super::GraphIoError;
use crate::graph::Graph;

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn pair(line: usize, text: &str) -> Result<(usize, usize), GraphIoError> {
    let malformed = |reason: String| GraphIoError::MalformedLine { line, reason };
    let mut it = text.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(malformed(format!("expected two integers, found `{text}`")));
    };
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| malformed(format!("`{s}` is not a non-negative integer")))
    };
    Ok((parse(a)?, parse(b)?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphIoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let Some((header_line, header)) = lines.next() else {
        return Err(GraphIoError::MalformedLine {
            line: 1,
            reason: "missing `n m` header".into(),
        });
    };
    let (n, m) = pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, body) in lines {
        if edges.len() == m {
            return Err(GraphIoError::MalformedLine {
                line,
                reason: format!("more than the {m} declared edges"),
            });
        }
        edges.push(pair(line, body)?);
        last_line = line;
    }
    if edges.len() < m {
        return Err(GraphIoError::MalformedLine {
            line: last_line + 1,
            reason: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new(n, &edges)?)
}
