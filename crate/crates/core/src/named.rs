//! Named graph constructors.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Complete,
    Cycle,
    Path,
    /// 8 vertices, 10 edges, girth 4: inner 4-cycle a-b-c-d with the outer
    /// paths a-e-f-c and d-g-h-b. Vertices a..h are 0..7.
    Wl8,
    /// The octagon 0-1-...-7-0 with the long chords {i, i+4}.
    Fig1H,
}

impl NamedGraph {
    pub fn token(&self) -> &'static str {
        match self {
            NamedGraph::Complete => "complete",
            NamedGraph::Cycle => "cycle",
            NamedGraph::Path => "path",
            NamedGraph::Wl8 => "wl8",
            NamedGraph::Fig1H => "fig1h",
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, GraphError> {
        match s {
            "complete" => Ok(NamedGraph::Complete),
            "cycle" => Ok(NamedGraph::Cycle),
            "path" => Ok(NamedGraph::Path),
            "wl8" => Ok(NamedGraph::Wl8),
            "fig1h" => Ok(NamedGraph::Fig1H),
            other => Err(GraphError::InvalidParameter(format!(
                "unknown graph name `{other}`"
            ))),
        }
    }
}

pub fn named_graph(name: NamedGraph, n: Option<usize>) -> Result<Graph, GraphError> {
    match (name, n) {
        (NamedGraph::Complete, None) => Err(GraphError::MissingParameter("complete")),
        (NamedGraph::Cycle, None) => Err(GraphError::MissingParameter("cycle")),
        (NamedGraph::Path, None) => Err(GraphError::MissingParameter("path")),
        (NamedGraph::Complete | NamedGraph::Path, Some(0)) => Err(GraphError::InvalidParameter(
            format!("{name} needs at least 1 vertex"),
        )),
        (NamedGraph::Cycle, Some(k)) if k < 3 => Err(GraphError::InvalidParameter(format!(
            "cycle needs at least 3 vertices, got {k}"
        ))),
        (_, Some(k)) if k > crate::MAX_ORDER => Err(GraphError::OrderTooLarge(k)),
        (NamedGraph::Complete, Some(k)) => Ok(complete(k)),
        (NamedGraph::Cycle, Some(k)) => Ok(cycle(k)),
        (NamedGraph::Path, Some(k)) => Ok(path(k)),
        (NamedGraph::Wl8 | NamedGraph::Fig1H, Some(_)) => Err(GraphError::InvalidParameter(
            format!("{name} takes no order parameter"),
        )),
        (NamedGraph::Wl8, None) => Ok(wl8()),
        (NamedGraph::Fig1H, None) => Ok(fig1h()),
    }
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("complete graph edges are canonical")
}

/// `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle edges are canonical")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("path edges are canonical")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::new(a + b, &edges).expect("bipartite edges are canonical")
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

pub fn wl8() -> Graph {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    const F: usize = 5;
    const G: usize = 6;
    const H: usize = 7;
    Graph::new(
        8,
        &[
            (A, B),
            (B, C),
            (C, D),
            (D, A),
            (A, E),
            (E, F),
            (F, C),
            (D, G),
            (G, H),
            (H, B),
        ],
    )
    .expect("WL8 edges are canonical")
}

pub fn fig1h() -> Graph {
    let mut edges: Vec<_> = (0..8).map(|v| (v, (v + 1) % 8)).collect();
    edges.extend((0..4).map(|v| (v, v + 4)));
    Graph::new(8, &edges).expect("octagon with long chords is canonical")
}
