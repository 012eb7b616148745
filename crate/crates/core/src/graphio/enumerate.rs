//! One representative per isomorphism class of small graphs.
//!
//! Order-`n` graphs are grown from the order-`n-1` classes by attaching a new
//! vertex to every neighbor subset and keeping one canonical form per class.
//! Every graph has a vertex whose removal leaves a connected graph when the
//! original is connected, and girth bounds survive vertex deletion, so both
//! can be imposed level by level.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::canon::{canonical_form, graph_from_code};
use super::GraphIoError;
use crate::bitset::VertexSet;
use crate::graph::{GirthValue, Graph};

/// Largest order the built-in generator accepts.
pub const MAX_GENERATOR_ORDER: usize = 9;

/// Conjunctive filter on generated graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumFilter {
    pub order: usize,
    pub connected: bool,
    pub min_girth: Option<GirthValue>,
    pub triangle_free: bool,
    pub min_degree: Option<usize>,
    pub must_contain_c4: bool,
}

impl EnumFilter {
    /// Connected graphs of the given order, no other constraint.
    pub fn connected(order: usize) -> Self {
        Self {
            order,
            connected: true,
            min_girth: None,
            triangle_free: false,
            min_degree: None,
            must_contain_c4: false,
        }
    }

    pub fn with_order(&self, order: usize) -> Self {
        Self { order, ..self.clone() }
    }

    pub fn min_girth(mut self, g: GirthValue) -> Self {
        self.min_girth = Some(g);
        self
    }

    pub fn triangle_free(mut self) -> Self {
        self.triangle_free = true;
        self
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub fn containing_c4(mut self) -> Self {
        self.must_contain_c4 = true;
        self
    }

    fn girth_bound(&self) -> Option<GirthValue> {
        let tf = self.triangle_free.then_some(GirthValue::Finite(4));
        match (self.min_girth, tf) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    fn hereditary_ok(&self, g: &Graph) -> bool {
        self.girth_bound().map_or(true, |bound| g.girth() >= bound)
    }

    /// Every predicate of the filter, checked directly.
    pub fn accepts(&self, g: &Graph) -> bool {
        g.order() == self.order
            && (!self.connected || g.is_connected())
            && self.hereditary_ok(g)
            && self.min_degree.map_or(true, |d| g.min_degree() >= d)
            && (!self.must_contain_c4 || g.contains_c4())
    }
}

fn extend(base: &Graph, neighbors: &VertexSet) -> Graph {
    let n = base.order();
    let mut edges = base.edges();
    edges.extend(neighbors.iter().map(|u| (u, n)));
    Graph::new(n + 1, &edges).expect("extension edges are canonical")
}

/// Canonical codes of the order-`n` classes satisfying the structural part
/// of the filter (connectivity and girth), ascending.
fn level(filter: &EnumFilter, n: usize) -> Vec<u128> {
    if n == 1 {
        return vec![0];
    }
    let previous = level(filter, n - 1);
    let base_order = n - 1;
    let min_subset = u32::from(filter.connected);
    let mut codes: Vec<u128> = previous
        .par_iter()
        .flat_map_iter(|&code| {
            let base = graph_from_code(base_order, code);
            let mut local = BTreeSet::new();
            for mask in min_subset..(1u32 << base_order) {
                let nbrs: VertexSet = (0..base_order).filter(|&v| mask >> v & 1 == 1).collect();
                if filter.girth_bound().is_some_and(|b| b >= GirthValue::Finite(4))
                    && !base.is_independent(&nbrs)
                {
                    continue;
                }
                let g = extend(&base, &nbrs);
                if filter.hereditary_ok(&g) {
                    local.insert(canonical_form(&g).code);
                }
            }
            local.into_iter()
        })
        .collect();
    codes.par_sort_unstable();
    codes.dedup();
    codes
}

/// Graphs of exactly `filter.order` vertices passing the filter, one per
/// isomorphism class, canonically labeled, in ascending canonical-code order.
pub fn enumerate_graphs(filter: &EnumFilter) -> Result<std::vec::IntoIter<Graph>, GraphIoError> {
    if filter.order == 0 {
        return Err(GraphIoError::InvalidFilter("order must be at least 1".into()));
    }
    if filter.order > MAX_GENERATOR_ORDER {
        return Err(GraphIoError::OrderTooLargeForGenerator(filter.order));
    }
    let graphs: Vec<Graph> = level(filter, filter.order)
        .into_iter()
        .map(|code| graph_from_code(filter.order, code))
        .filter(|g| filter.accepts(g))
        .collect();
    Ok(graphs.into_iter())
}

/// [`enumerate_graphs`] with `connected` forced on.
pub fn enumerate_connected_graphs(
    filter: &EnumFilter,
) -> Result<std::vec::IntoIter<Graph>, GraphIoError> {
    enumerate_graphs(&EnumFilter {
        connected: true,
        ..filter.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::super::canon::{oracle::brute_canonical_code, pair_count};
    use super::*;
    use crate::graphio::{parse_graph6, write_graph6};
    use crate::named::{cycle, path};
    use std::collections::BTreeSet;

    /// Every labeled graph on `n` vertices, deduplicated by the brute-force
    /// minimum code over all permutations.
    fn labeled_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> BTreeSet<u128> {
        (0u128..1 << pair_count(n))
            .map(|code| graph_from_code(n, code))
            .filter(|g| keep(g))
            .map(|g| brute_canonical_code(&g))
            .collect()
    }

    fn count(filter: &EnumFilter) -> usize {
        enumerate_graphs(filter).unwrap().len()
    }

    #[test]
    fn small_connected_counts() {
        assert_eq!(count(&EnumFilter::connected(1)), 1);
        assert_eq!(count(&EnumFilter::connected(2)), 1);
        let three: Vec<_> = enumerate_connected_graphs(&EnumFilter::connected(3)).unwrap().collect();
        assert_eq!(three.len(), 2);
        assert!(three.iter().any(|g| g.size() == 2) && three.iter().any(|g| g.size() == 3));
        assert_eq!(count(&EnumFilter::connected(4)), 6);
    }

    #[test]
    fn counts_match_labeled_oracle() {
        for n in 1..=5 {
            let want = labeled_classes(n, |g| g.is_connected()).len();
            assert_eq!(count(&EnumFilter::connected(n)), want, "connected, n = {n}");
            let all = EnumFilter { connected: false, ..EnumFilter::connected(n) };
            assert_eq!(count(&all), labeled_classes(n, |_| true).len(), "all, n = {n}");
        }
        let want = labeled_classes(6, |g| g.is_connected()).len();
        assert_eq!(want, 112);
        assert_eq!(count(&EnumFilter::connected(6)), want);
    }

    #[test]
    fn girth_five_order_five() {
        let f = EnumFilter::connected(5).min_girth(GirthValue::Finite(5));
        let got: Vec<_> = enumerate_graphs(&f).unwrap().collect();
        let want = labeled_classes(5, |g| g.is_connected() && g.girth() >= GirthValue::Finite(5));
        assert_eq!(got.len(), want.len());
        assert_eq!(got.len(), 4); // three trees and C5
        assert_eq!(got.iter().filter(|g| g.girth() == GirthValue::Finite(5)).count(), 1);
    }

    #[test]
    fn filtered_counts_match_oracle_at_six() {
        let filters = [
            EnumFilter::connected(6).triangle_free(),
            EnumFilter::connected(6).triangle_free().containing_c4(),
            EnumFilter::connected(6).min_degree(2),
            EnumFilter::connected(6).min_girth(GirthValue::Infinite),
        ];
        for f in filters {
            let want = labeled_classes(6, |g| f.accepts(g)).len();
            assert_eq!(count(&f), want, "{f:?}");
        }
    }

    #[test]
    fn no_duplicates_and_filters_hold() {
        for n in 1..=6 {
            let graphs: Vec<_> = enumerate_graphs(&EnumFilter::connected(n)).unwrap().collect();
            let brute: BTreeSet<u128> = graphs.iter().map(brute_canonical_code).collect();
            assert_eq!(brute.len(), graphs.len(), "isomorphic duplicates at n = {n}");
        }
        let f = EnumFilter::connected(8).triangle_free().min_degree(2).containing_c4();
        for g in enumerate_graphs(&f).unwrap() {
            assert!(f.accepts(&g));
        }
    }

    #[test]
    fn deterministic_and_round_trips() {
        let f = EnumFilter::connected(7);
        let a: Vec<_> = enumerate_graphs(&f).unwrap().collect();
        let b: Vec<_> = enumerate_graphs(&f).unwrap().collect();
        assert_eq!(a, b);
        assert_eq!(a.len(), 853);
        for g in &a {
            assert_eq!(&parse_graph6(&write_graph6(g).unwrap()).unwrap(), g);
        }
    }

    #[test]
    fn contains_expected_members() {
        let f = EnumFilter::connected(5).min_girth(GirthValue::Finite(5));
        let forms: BTreeSet<_> = enumerate_graphs(&f).unwrap().map(|g| canonical_form(&g)).collect();
        assert!(forms.contains(&canonical_form(&cycle(5))));
        assert!(forms.contains(&canonical_form(&path(5))));
    }

    #[test]
    fn generator_limits() {
        assert_eq!(
            enumerate_graphs(&EnumFilter::connected(10)).unwrap_err(),
            GraphIoError::OrderTooLargeForGenerator(10)
        );
        assert!(matches!(
            enumerate_graphs(&EnumFilter::connected(0)),
            Err(GraphIoError::InvalidFilter(_))
        ));
    }
}
