//! Maximal independent sets, independence numbers and well-coveredness.
//!
//! Enumeration is the pivoting Bron–Kerbosch scheme run on the complement:
//! a branch on `v` removes `N[v]` from both the candidate and the excluded
//! sets. Candidates are taken in ascending order and the pivot is the vertex
//! of `P ∪ X` with the most non-neighbors in `P` (lowest index on ties), so
//! the stream order is reproducible.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};

/// Orders above this refuse full enumeration unless explicitly overridden.
pub const DEFAULT_ENUMERATION_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndependenceError {
    #[error("OrderTooLarge: full enumeration on {order} vertices exceeds the cap of {cap}; pass an explicit override")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("VertexOutOfRange: vertex {vertex} is not below the order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("NotWellCovered: the graph is not well-covered")]
    NotWellCovered,
}

impl From<GraphError> for IndependenceError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::VertexOutOfRange { vertex, order } => {
                IndependenceError::VertexOutOfRange { vertex, order }
            }
            other => unreachable!("unexpected graph error in independence code: {other}"),
        }
    }
}

/// Whether full enumeration may run above [`DEFAULT_ENUMERATION_CAP`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SizeGuard {
    #[default]
    Capped,
    Override,
}

impl SizeGuard {
    pub fn check(self, g: &Graph) -> Result<(), IndependenceError> {
        if self == SizeGuard::Capped && g.order() > DEFAULT_ENUMERATION_CAP {
            Err(IndependenceError::OrderTooLarge {
                order: g.order(),
                cap: DEFAULT_ENUMERATION_CAP,
            })
        } else {
            Ok(())
        }
    }

    /// Override when the caller's own cap already exceeds the default.
    pub fn for_cap(cap: usize) -> Self {
        if cap > DEFAULT_ENUMERATION_CAP {
            SizeGuard::Override
        } else {
            SizeGuard::Capped
        }
    }
}

struct Frame {
    chosen: VertexSet,
    candidates: VertexSet,
    excluded: VertexSet,
    branches: VertexSet,
}

/// Stream of every maximal independent set, each exactly once.
pub struct MisIter<'g> {
    graph: &'g Graph,
    stack: Vec<Frame>,
    empty_pending: bool,
    emitted: u64,
}

impl<'g> MisIter<'g> {
    fn new(graph: &'g Graph) -> Self {
        let mut it = MisIter {
            graph,
            stack: Vec::with_capacity(graph.order() + 1),
            empty_pending: graph.order() == 0,
            emitted: 0,
        };
        if graph.order() > 0 {
            let candidates = graph.vertices();
            it.stack.push(Frame {
                chosen: VertexSet::new(),
                candidates,
                excluded: VertexSet::new(),
                branches: it.branch_set(&candidates, &VertexSet::new()),
            });
        }
        it
    }

    /// Number of sets emitted so far.
    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    fn branch_set(&self, candidates: &VertexSet, excluded: &VertexSet) -> VertexSet {
        let mut best: Option<(usize, usize)> = None;
        for u in candidates.union(excluded).iter() {
            let free = candidates.len() - candidates.intersection_len(&self.graph.closed_neighbors(u));
            if best.map_or(true, |(_, f)| free > f) {
                best = Some((u, free));
            }
        }
        let (pivot, _) = best.expect("branch_set called with empty candidates");
        candidates.intersection(&self.graph.closed_neighbors(pivot))
    }
}

impl Iterator for MisIter<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.empty_pending {
            self.empty_pending = false;
            self.emitted += 1;
            return Some(VertexSet::new());
        }
        loop {
            let frame = self.stack.last_mut()?;
            let Some(v) = frame.branches.first() else {
                self.stack.pop();
                continue;
            };
            frame.branches.remove(v);
            let closed = self.graph.closed_neighbors(v);
            let mut chosen = frame.chosen;
            chosen.insert(v);
            let candidates = frame.candidates.difference(&closed);
            let excluded = frame.excluded.difference(&closed);
            frame.candidates.remove(v);
            frame.excluded.insert(v);
            if candidates.is_empty() {
                if excluded.is_empty() {
                    self.emitted += 1;
                    return Some(chosen);
                }
                continue;
            }
            let branches = self.branch_set(&candidates, &excluded);
            self.stack.push(Frame {
                chosen,
                candidates,
                excluded,
                branches,
            });
        }
    }
}

/// All maximal independent sets, refusing graphs above the default cap.
pub fn enumerate_mis(g: &Graph) -> Result<MisIter<'_>, IndependenceError> {
    enumerate_mis_with(g, SizeGuard::Capped)
}

pub fn enumerate_mis_with(g: &Graph, guard: SizeGuard) -> Result<MisIter<'_>, IndependenceError> {
    guard.check(g)?;
    Ok(MisIter::new(g))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceSummary {
    pub alpha: usize,
    pub idom: usize,
    pub well_covered: bool,
    /// (larger, smaller) maximal independent sets when not well-covered.
    pub witness: Option<(VertexSet, VertexSet)>,
    #[serde(skip)]
    pub sets_examined: u64,
}

/// Exact `α(G)` and `i(G)` by full enumeration. The witness pairs the first
/// maximum and the first minimum set seen.
pub fn independence_summary(g: &Graph) -> Result<IndependenceSummary, IndependenceError> {
    independence_summary_with(g, SizeGuard::Capped)
}

pub fn independence_summary_with(
    g: &Graph,
    guard: SizeGuard,
) -> Result<IndependenceSummary, IndependenceError> {
    let mut it = enumerate_mis_with(g, guard)?;
    let first = it.next().expect("every graph has a maximal independent set");
    let (mut largest, mut smallest) = (first, first);
    for m in it.by_ref() {
        if m.len() > largest.len() {
            largest = m;
        }
        if m.len() < smallest.len() {
            smallest = m;
        }
    }
    let well_covered = largest.len() == smallest.len();
    Ok(IndependenceSummary {
        alpha: largest.len(),
        idom: smallest.len(),
        well_covered,
        witness: (!well_covered).then_some((largest, smallest)),
        sets_examined: it.emitted(),
    })
}

/// Outcome of the short-circuiting well-coveredness decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coverage {
    WellCovered { alpha: usize },
    NotWellCovered { larger: VertexSet, smaller: VertexSet },
}

impl Coverage {
    pub fn is_well_covered(&self) -> bool {
        matches!(self, Coverage::WellCovered { .. })
    }
}

/// Decides well-coveredness, stopping at the first pair of maximal sets of
/// different sizes. Returns the decision and the number of sets examined.
pub fn decide_well_covered(g: &Graph, guard: SizeGuard) -> Result<(Coverage, u64), IndependenceError> {
    let mut it = enumerate_mis_with(g, guard)?;
    let first = it.next().expect("every graph has a maximal independent set");
    for m in it.by_ref() {
        if m.len() != first.len() {
            let (larger, smaller) = if m.len() > first.len() { (m, first) } else { (first, m) };
            return Ok((Coverage::NotWellCovered { larger, smaller }, it.emitted()));
        }
    }
    Ok((Coverage::WellCovered { alpha: first.len() }, it.emitted()))
}

pub fn is_well_covered(g: &Graph) -> Result<bool, IndependenceError> {
    Ok(decide_well_covered(g, SizeGuard::Capped)?.0.is_well_covered())
}

/// An independent `J` with `V - N[J] = {w}`, searched among maximal
/// independent sets of `G - N[w]`; the first hit in enumeration order.
pub fn isolatable(g: &Graph, w: usize) -> Result<Option<VertexSet>, IndependenceError> {
    isolating_set_avoiding(g, w, &VertexSet::new())
}

/// Like [`isolatable`], restricted to sets disjoint from `forbidden`.
pub fn isolating_set_avoiding(
    g: &Graph,
    w: usize,
    forbidden: &VertexSet,
) -> Result<Option<VertexSet>, IndependenceError> {
    g.check_vertex(w)?;
    SizeGuard::Capped.check(g)?;
    let keep = g
        .closed_neighbors(w)
        .union(forbidden)
        .complement(g.order());
    let (rest, map) = g.induced_subgraph(&keep);
    let back: Vec<usize> = (0..g.order()).filter(|&v| map[v].is_some()).collect();
    let target = VertexSet::singleton(w);
    for m in MisIter::new(&rest) {
        let host: VertexSet = m.iter().map(|v| back[v]).collect();
        if g.undominated(&host) == target {
            return Ok(Some(host));
        }
    }
    Ok(None)
}

pub fn isolatable_vertices(g: &Graph) -> Result<VertexSet, IndependenceError> {
    let mut out = VertexSet::new();
    for w in 0..g.order() {
        if isolatable(g, w)?.is_some() {
            out.insert(w);
        }
    }
    Ok(out)
}

/// `G - x` is well-covered with `α(G - x) = α(G)`. Requires `G` well-covered.
pub fn is_extendable(g: &Graph, x: usize) -> Result<bool, IndependenceError> {
    g.check_vertex(x)?;
    let Coverage::WellCovered { alpha } = decide_well_covered(g, SizeGuard::Capped)?.0 else {
        return Err(IndependenceError::NotWellCovered);
    };
    extendable_given_alpha(g, x, alpha)
}

fn extendable_given_alpha(g: &Graph, x: usize, alpha: usize) -> Result<bool, IndependenceError> {
    let (rest, _) = g.delete_vertex(x)?;
    Ok(match decide_well_covered(&rest, SizeGuard::Capped)?.0 {
        Coverage::WellCovered { alpha: a } => a == alpha,
        Coverage::NotWellCovered { .. } => false,
    })
}

/// The two characterizations of 1-well-coveredness: (every vertex
/// extendable, no vertex isolatable), each conjoined with well-coveredness.
pub fn one_well_covered_routes(g: &Graph) -> Result<(bool, bool), IndependenceError> {
    let Coverage::WellCovered { alpha } = decide_well_covered(g, SizeGuard::Capped)?.0 else {
        return Ok((false, false));
    };
    let mut all_extendable = true;
    for x in 0..g.order() {
        if !extendable_given_alpha(g, x, alpha)? {
            all_extendable = false;
            break;
        }
    }
    let none_isolatable = isolatable_vertices(g)?.is_empty();
    Ok((all_extendable, none_isolatable))
}

/// Well-covered with every vertex extendable. Both characterizations are
/// computed; they must agree for well-covered graphs.
pub fn is_one_well_covered(g: &Graph) -> Result<bool, IndependenceError> {
    let (by_extension, by_isolation) = one_well_covered_routes(g)?;
    assert_eq!(
        by_extension, by_isolation,
        "extendable and non-isolatable characterizations disagree on {g:?}"
    );
    Ok(by_extension)
}

/// Greedy maximal independent set along a seeded random vertex order.
pub fn random_maximal_independent_set(g: &Graph, seed: u64) -> VertexSet {
    let mut order: Vec<usize> = (0..g.order()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let mut chosen = VertexSet::new();
    let mut blocked = VertexSet::new();
    for v in order {
        if !blocked.contains(v) {
            chosen.insert(v);
            blocked = blocked.union(&g.closed_neighbors(v));
        }
    }
    chosen
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete, cycle, path, wl8};
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    fn sorted_mis(g: &Graph) -> Vec<VertexSet> {
        let mut v: Vec<_> = enumerate_mis(g).unwrap().collect();
        v.sort();
        v
    }

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    #[test]
    fn mis_examples() {
        assert_eq!(sorted_mis(&complete(3)), vec![set(&[0]), set(&[1]), set(&[2])]);
        let c5 = sorted_mis(&cycle(5));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|m| m.len() == 2));
        assert_eq!(c5, oracle::maximal_independent_sets(&cycle(5)));
        assert_eq!(sorted_mis(&path(3)), vec![set(&[0, 2]), set(&[1])]);
        assert_eq!(sorted_mis(&Graph::empty(0)), vec![VertexSet::new()]);
        assert_eq!(sorted_mis(&Graph::empty(3)), vec![set(&[0, 1, 2])]);
    }

    #[test]
    fn enumeration_order_is_stable() {
        let g = wl8();
        let a: Vec<_> = enumerate_mis(&g).unwrap().collect();
        let b: Vec<_> = enumerate_mis(&g).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn guardrail() {
        let big = cycle(31);
        assert!(matches!(
            enumerate_mis(&big),
            Err(IndependenceError::OrderTooLarge { order: 31, cap: 30 })
        ));
        assert!(enumerate_mis_with(&big, SizeGuard::Override).is_ok());
        assert!(independence_summary(&big).is_err());
    }

    #[test]
    fn summary_examples() {
        let s = independence_summary(&cycle(5)).unwrap();
        assert_eq!((s.alpha, s.idom, s.well_covered, s.witness), (2, 2, true, None));

        let s = independence_summary(&path(3)).unwrap();
        assert_eq!((s.alpha, s.idom, s.well_covered), (2, 1, false));
        assert_eq!(s.witness, Some((set(&[0, 2]), set(&[1]))));

        let s = independence_summary(&cycle(4)).unwrap();
        assert_eq!((s.alpha, s.idom, s.well_covered), (2, 2, true));

        // C7: alpha = 3 and i = 3.
        let s = independence_summary(&cycle(7)).unwrap();
        assert_eq!((s.alpha, s.idom, s.well_covered), (3, 3, true));
    }

    #[test]
    fn isolatable_examples() {
        assert_eq!(isolatable(&path(3), 0).unwrap(), Some(set(&[2])));
        for w in 0..5 {
            assert_eq!(isolatable(&cycle(5), w).unwrap(), None);
        }
        assert_eq!(isolatable(&cycle(7), 0).unwrap(), Some(set(&[2, 5])));
        assert!(isolatable_vertices(&cycle(5)).unwrap().is_empty());
        assert_eq!(isolatable_vertices(&cycle(7)).unwrap().len(), 7);
        assert!(isolatable_vertices(&complete(2)).unwrap().is_empty());
        // K1: J = ∅ already leaves exactly {0}.
        assert_eq!(isolatable(&Graph::empty(1), 0).unwrap(), Some(VertexSet::new()));
        assert!(matches!(
            isolatable(&path(3), 3),
            Err(IndependenceError::VertexOutOfRange { vertex: 3, order: 3 })
        ));
    }

    #[test]
    fn extendable_examples() {
        for x in 0..5 {
            assert!(is_extendable(&cycle(5), x).unwrap());
        }
        assert!(is_extendable(&complete(2), 0).unwrap());
        assert!(is_extendable(&complete(2), 1).unwrap());
        assert_eq!(is_extendable(&path(3), 0), Err(IndependenceError::NotWellCovered));
        // C7 is well-covered (alpha = i = 3) but C7 - x = P6 is not.
        assert!(!is_extendable(&cycle(7), 0).unwrap());
        assert!(is_extendable(&cycle(5), 9).is_err());
    }

    #[test]
    fn one_well_covered_examples() {
        assert!(is_one_well_covered(&cycle(5)).unwrap());
        assert!(is_one_well_covered(&complete(2)).unwrap());
        assert!(!is_one_well_covered(&path(4)).unwrap());
        assert_eq!(one_well_covered_routes(&path(4)).unwrap(), (false, false));
        assert!(is_one_well_covered(&wl8()).unwrap());
    }

    #[test]
    fn sampler_examples() {
        for seed in 0..20 {
            assert_eq!(random_maximal_independent_set(&complete(3), seed).len(), 1);
            let m = random_maximal_independent_set(&cycle(5), seed);
            assert_eq!(m.len(), 2);
            assert!(cycle(5).is_maximal_independent(&m));
        }
        assert!(random_maximal_independent_set(&Graph::empty(0), 7).is_empty());
        let g = wl8();
        assert_eq!(
            random_maximal_independent_set(&g, 42),
            random_maximal_independent_set(&g, 42)
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn enumeration_matches_brute_force(g in arb_graph(12)) {
            let got = sorted_mis(&g);
            let want = oracle::maximal_independent_sets(&g);
            prop_assert_eq!(&got, &want);
            for m in &got {
                prop_assert_eq!(g.closed_set_neighbors(m), g.vertices());
            }
            let s = independence_summary(&g).unwrap();
            prop_assert_eq!(s.alpha, got.iter().map(VertexSet::len).max().unwrap());
            prop_assert_eq!(s.idom, got.iter().map(VertexSet::len).min().unwrap());
            prop_assert_eq!(s.well_covered, s.alpha == s.idom);
            if let Some((a, b)) = s.witness {
                prop_assert!(g.is_maximal_independent(&a) && g.is_maximal_independent(&b));
                prop_assert!(a.len() != b.len());
            }
            let (decision, _) = decide_well_covered(&g, SizeGuard::Capped).unwrap();
            prop_assert_eq!(decision.is_well_covered(), s.well_covered);
        }

        #[test]
        fn isolatable_reduction_matches_naive(g in arb_graph(10)) {
            for w in 0..g.order() {
                let fast = isolatable(&g, w).unwrap();
                let naive = oracle::isolating_set(&g, w);
                prop_assert_eq!(fast.is_some(), naive.is_some());
                if let Some(j) = fast {
                    prop_assert!(g.is_independent(&j));
                    prop_assert!(!g.closed_set_neighbors(&j).contains(w));
                    prop_assert_eq!(g.undominated(&j), VertexSet::singleton(w));
                }
            }
        }

        #[test]
        fn extendable_iff_not_isolatable(g in arb_graph(9)) {
            if is_well_covered(&g).unwrap() {
                let iso = isolatable_vertices(&g).unwrap();
                for x in 0..g.order() {
                    prop_assert_eq!(is_extendable(&g, x).unwrap(), !iso.contains(x));
                }
            }
        }

        #[test]
        fn strong_support_forbids_well_covered(g in arb_graph(9)) {
            if !g.strong_support_vertices().is_empty() {
                prop_assert!(!independence_summary(&g).unwrap().well_covered);
            }
        }

        #[test]
        fn sampler_is_maximal(g in arb_graph(20), seed in any::<u64>()) {
            let m = random_maximal_independent_set(&g, seed);
            prop_assert!(g.is_maximal_independent(&m));
            prop_assert_eq!(m, random_maximal_independent_set(&g, seed));
        }
    }
}
