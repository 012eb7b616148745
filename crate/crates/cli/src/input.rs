//! Graph arguments: named constructors (`cycle:5`, `wl8`), inline edge lists
//! (`4:0-1,1-2,2-3`), files or `-` holding an edge list or one graph6 line,
//! and bare graph6 strings.

use std::io::Read;
use std::path::Path;

use wellcovered::graphio::{parse_edge_list, parse_graph6};
use wellcovered::named::{named_graph, NamedGraph};
use wellcovered::Graph;

pub fn load_graph(token: &str) -> Result<Graph, String> {
    if token == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("cannot read standard input: {e}"))?;
        return parse_text(&text).map_err(|e| format!("standard input: {e}"));
    }
    if let Some(g) = named(token)? {
        return Ok(g);
    }
    if let Some(g) = inline(token)? {
        return Ok(g);
    }
    let path = Path::new(token);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {token}: {e}"))?;
        return parse_text(&text).map_err(|e| format!("{token}: {e}"));
    }
    parse_graph6(token).map_err(|e| format!("`{token}` is not a graph name, edge list, file or graph6 string: {e}"))
}

fn named(token: &str) -> Result<Option<Graph>, String> {
    let (name, param) = match token.split_once(':') {
        Some((name, param)) => (name, Some(param)),
        None => (token, None),
    };
    let Ok(name) = name.parse::<NamedGraph>() else {
        return Ok(None);
    };
    let n = param
        .map(|p| p.parse::<usize>().map_err(|_| format!("`{p}` is not an order in `{token}`")))
        .transpose()?;
    named_graph(name, n).map(Some).map_err(|e| e.to_string())
}

fn inline(token: &str) -> Result<Option<Graph>, String> {
    let Some((order, edges)) = token.split_once(':') else {
        return Ok(None);
    };
    let Ok(order) = order.parse::<usize>() else {
        return Ok(None);
    };
    let mut pairs = Vec::new();
    for e in edges.split(',').filter(|e| !e.is_empty()) {
        let (u, v) = e
            .split_once('-')
            .and_then(|(u, v)| Some((u.parse::<usize>().ok()?, v.parse::<usize>().ok()?)))
            .ok_or_else(|| format!("bad edge `{e}` in `{token}`: expected u-v"))?;
        pairs.push((u, v));
    }
    Graph::new(order, &pairs).map(Some).map_err(|e| e.to_string())
}

/// An edge list when the first content line is two integers, else graph6.
pub fn parse_text(text: &str) -> Result<Graph, String> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = lines.next().ok_or("no graph found")?;
    let header: Vec<&str> = first.split_whitespace().collect();
    if header.len() == 2 && header.iter().all(|t| t.parse::<usize>().is_ok()) {
        return parse_edge_list(text).map_err(|e| e.to_string());
    }
    if lines.next().is_some() {
        return Err("expected a single graph6 line".into());
    }
    parse_graph6(first).map_err(|e| e.to_string())
}
