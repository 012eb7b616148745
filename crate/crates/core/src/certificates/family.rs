//! Graphs covered by disjoint cliques whose private parts `W_j` are large
//! enough that every product with a graph of maximum degree `k` stays
//! well-covered.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CertificateError;
use crate::bitset::VertexSet;
use crate::graph::{cartesian_product, Graph};

/// Parameters of a clique family member.
///
/// Clique `j` occupies a contiguous block of vertices in order; `W_j` is the
/// last `w_sizes[j]` vertices of that block. Extra edges use global indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub r: usize,
    pub clique_orders: Vec<usize>,
    pub w_sizes: Vec<usize>,
    #[serde(default)]
    pub extra_edges: Vec<(usize, usize)>,
    pub k: usize,
}

/// The family condition a [`FamilySpec`] fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum SpecCondition {
    NoCliques,
    LengthMismatch { field: &'static str, expected: usize, found: usize },
    CliqueTooSmall { clique: usize, order: usize },
    WTooSmall { clique: usize, size: usize, min: usize },
    WLargerThanClique { clique: usize, size: usize, order: usize },
    EdgeOutOfRange { u: usize, v: usize, order: usize },
    EdgeInsideClique { u: usize, v: usize },
    EdgeTouchesW { u: usize, v: usize },
    DuplicateEdge { u: usize, v: usize },
}

impl fmt::Display for SpecCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecCondition::NoCliques => write!(f, "NoCliques(r must be at least 1)"),
            SpecCondition::LengthMismatch { field, expected, found } => {
                write!(f, "LengthMismatch({field} has {found} entries, expected {expected})")
            }
            SpecCondition::CliqueTooSmall { clique, order } => {
                write!(f, "CliqueTooSmall(clique {clique} has order {order}, needs at least 3)")
            }
            SpecCondition::WTooSmall { clique, size, min } => {
                write!(f, "WTooSmall(W_{clique} has {size} vertices, needs at least k+1 = {min})")
            }
            SpecCondition::WLargerThanClique { clique, size, order } => {
                write!(f, "WLargerThanClique(W_{clique} has {size} vertices but the clique has {order})")
            }
            SpecCondition::EdgeOutOfRange { u, v, order } => {
                write!(f, "EdgeOutOfRange({u}-{v} with {order} vertices)")
            }
            SpecCondition::EdgeInsideClique { u, v } => {
                write!(f, "EdgeInsideClique({u}-{v} joins one clique to itself)")
            }
            SpecCondition::EdgeTouchesW { u, v } => write!(f, "EdgeTouchesW({u}-{v} meets some W_j)"),
            SpecCondition::DuplicateEdge { u, v } => write!(f, "DuplicateEdge({u}-{v})"),
        }
    }
}

impl FamilySpec {
    /// Three copies of `K10` with `|W_j| = 4` and `k = 3`, plus every edge
    /// between the first six vertices of distinct cliques.
    pub fn k10_example() -> Self {
        let edges = (0..3)
            .flat_map(|a| (a + 1..3).map(move |b| (a, b)))
            .flat_map(|(a, b)| (0..6).flat_map(move |i| (0..6).map(move |j| (10 * a + i, 10 * b + j))))
            .collect();
        Self {
            r: 3,
            clique_orders: vec![10; 3],
            w_sizes: vec![4; 3],
            extra_edges: edges,
            k: 3,
        }
    }

    pub fn order(&self) -> usize {
        self.clique_orders.iter().sum()
    }

    /// Start of each clique's block, plus the total order at the end.
    fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.clique_orders.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &n in &self.clique_orders {
            acc += n;
            out.push(acc);
        }
        out
    }

    /// `W_j` as a set of global indices.
    pub fn w_set(&self, j: usize) -> VertexSet {
        let offsets = self.offsets();
        VertexSet::range(offsets[j + 1] - self.w_sizes[j], offsets[j + 1])
    }

    fn clique_of(&self, v: usize) -> usize {
        self.offsets().partition_point(|&start| start <= v) - 1
    }

    pub fn validate(&self) -> Result<(), SpecCondition> {
        if self.r == 0 {
            return Err(SpecCondition::NoCliques);
        }
        for (field, found) in [
            ("clique_orders", self.clique_orders.len()),
            ("w_sizes", self.w_sizes.len()),
        ] {
            if found != self.r {
                return Err(SpecCondition::LengthMismatch { field, expected: self.r, found });
            }
        }
        for (clique, (&order, &size)) in self.clique_orders.iter().zip(&self.w_sizes).enumerate() {
            if order < 3 {
                return Err(SpecCondition::CliqueTooSmall { clique, order });
            }
            if size < self.k + 1 {
                return Err(SpecCondition::WTooSmall { clique, size, min: self.k + 1 });
            }
            if size > order {
                return Err(SpecCondition::WLargerThanClique { clique, size, order });
            }
        }
        let order = self.order();
        let w_all = (0..self.r).fold(VertexSet::new(), |acc, j| acc.union(&self.w_set(j)));
        let mut seen = BTreeSet::new();
        for &(u, v) in &self.extra_edges {
            if u >= order || v >= order {
                return Err(SpecCondition::EdgeOutOfRange { u, v, order });
            }
            if self.clique_of(u) == self.clique_of(v) {
                return Err(SpecCondition::EdgeInsideClique { u, v });
            }
            if w_all.contains(u) || w_all.contains(v) {
                return Err(SpecCondition::EdgeTouchesW { u, v });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(SpecCondition::DuplicateEdge { u, v });
            }
        }
        Ok(())
    }
}

pub fn build_clique_family(spec: &FamilySpec) -> Result<Graph, CertificateError> {
    spec.validate().map_err(CertificateError::SpecViolation)?;
    let offsets = spec.offsets();
    let mut edges: Vec<(usize, usize)> = offsets
        .windows(2)
        .flat_map(|w| {
            let (start, end) = (w[0], w[1]);
            (start..end).flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
        })
        .collect();
    edges.extend(spec.extra_edges.iter().map(|&(u, v)| (u.min(v), u.max(v))));
    Ok(Graph::new(spec.order(), &edges)?)
}

/// `∪_h M_h × {h}` in `G □ H`, where `M_h` takes the lowest vertex of each
/// `W_j` not already used by a lower-indexed neighbor of `h`.
pub fn family_product_assignment(spec: &FamilySpec, h: &Graph) -> Result<VertexSet, CertificateError> {
    let g = build_clique_family(spec)?;
    let max_degree = h.max_degree();
    if max_degree > spec.k {
        return Err(CertificateError::DegreeTooLarge { max_degree, k: spec.k });
    }
    let (product, lab) = cartesian_product(&g, h)?;
    let mut layers: Vec<VertexSet> = Vec::with_capacity(h.order());
    for layer in h.vertices() {
        let taken = h
            .neighbors(layer)
            .iter()
            .filter(|&n| n < layer)
            .fold(VertexSet::new(), |acc, n| acc.union(&layers[n]));
        let mut m = VertexSet::new();
        for j in 0..spec.r {
            let pick = spec.w_set(j).difference(&taken).first().ok_or_else(|| {
                CertificateError::ProofInvariantBroken(format!("W_{j} exhausted at layer {layer}"))
            })?;
            m.insert(pick);
        }
        layers.push(m);
    }
    let assignment = layers
        .iter()
        .enumerate()
        .fold(VertexSet::new(), |acc, (layer, m)| acc.union(&lab.lift(m, layer)));
    if assignment.len() != spec.r * h.order() || !product.is_maximal_independent(&assignment) {
        return Err(CertificateError::ProofInvariantBroken(format!(
            "layer assignment {assignment} is not a maximal independent set of size {}",
            spec.r * h.order()
        )));
    }
    Ok(assignment)
}
