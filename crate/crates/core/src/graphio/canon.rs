//! Canonical labeling for small graphs.
//!
//! Vertices are colored by iterated degree refinement, then the search
//! individualizes one vertex of the first non-singleton cell at a time and
//! refines again. Every discrete coloring reached is a labeling; the form is
//! the least upper-triangle code among them. Twins (equal neighborhoods up to
//! each other) in a cell lead to identical subtrees, so only one is tried.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// The upper-triangle code must fit in 128 bits.
pub const MAX_CANON_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub order: usize,
    /// Upper triangle in graph6 bit order, first pair most significant.
    pub code: u128,
}

impl CanonicalForm {
    /// The canonically labeled representative.
    pub fn graph(&self) -> Graph {
        graph_from_code(self.order, self.code)
    }
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub(crate) fn graph_from_code(n: usize, code: u128) -> Graph {
    let total = pair_count(n);
    let mut rows = vec![VertexSet::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    Graph::from_rows(rows)
}

fn code_of(g: &Graph, position: &[u8]) -> u128 {
    let n = g.order();
    let mut at = [0usize; MAX_CANON_ORDER];
    for (v, &p) in position.iter().enumerate() {
        at[p as usize] = v;
    }
    let mut code = 0u128;
    for j in 1..n {
        let row = g.neighbors(at[j]);
        for &vi in &at[..j] {
            code = code << 1 | row.contains(vi) as u128;
        }
    }
    code
}

fn cell_count(colors: &[u8]) -> usize {
    colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
}

/// Splits cells by neighbor counts per color until stable. Colors stay
/// `0..k` and new cells keep the relative order of the cells they split.
fn refine(g: &Graph, colors: &mut [u8]) {
    let n = colors.len();
    let mut cells = cell_count(colors);
    let mut keyed: Vec<(u8, u64, usize)> = Vec::with_capacity(n);
    loop {
        if cells == n {
            return;
        }
        keyed.clear();
        for v in 0..n {
            let mut counts = [0u8; MAX_CANON_ORDER];
            for u in g.neighbors(v).iter() {
                counts[colors[u] as usize] += 1;
            }
            let packed = counts[..cells]
                .iter()
                .fold(0u64, |acc, &c| acc << 4 | c as u64);
            keyed.push((colors[v], packed, v));
        }
        keyed.sort_unstable();
        let mut next = 0u8;
        for k in 0..n {
            if k > 0 && (keyed[k].0, keyed[k].1) != (keyed[k - 1].0, keyed[k - 1].1) {
                next += 1;
            }
            colors[keyed[k].2] = next;
        }
        let refined = next as usize + 1;
        if refined == cells {
            return;
        }
        cells = refined;
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = *g.neighbors(u);
    let mut b = *g.neighbors(v);
    a.remove(v);
    b.remove(u);
    a == b
}

fn search(g: &Graph, colors: &mut Vec<u8>, best: &mut Option<u128>) {
    refine(g, colors);
    let n = colors.len();
    if cell_count(colors) == n {
        let code = code_of(g, colors);
        if best.map_or(true, |b| code < b) {
            *best = Some(code);
        }
        return;
    }
    let mut size = [0usize; MAX_CANON_ORDER];
    for &c in colors.iter() {
        size[c as usize] += 1;
    }
    let target = (0..n).find(|&c| size[c] > 1).unwrap() as u8;
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    for (k, &v) in cell.iter().enumerate() {
        if cell[..k].iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        let mut child: Vec<u8> = colors
            .iter()
            .enumerate()
            .map(|(u, &c)| match c.cmp(&target) {
                std::cmp::Ordering::Greater => c + 1,
                std::cmp::Ordering::Equal if u != v => c + 1,
                _ => c,
            })
            .collect();
        search(g, &mut child, best);
    }
}

/// Canonical form; equal forms iff the graphs are isomorphic.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    assert!(
        n <= MAX_CANON_ORDER,
        "canonical form supports order <= {MAX_CANON_ORDER}, got {n}"
    );
    let mut colors = vec![0u8; n];
    let mut best = None;
    if n > 0 {
        search(g, &mut colors, &mut best);
    }
    CanonicalForm {
        order: n,
        code: best.unwrap_or(0),
    }
}

#[cfg(test)]
pub(crate) mod oracle {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == perm.len() {
                out.push(perm.clone());
                return;
            }
            for i in k..perm.len() {
                perm.swap(k, i);
                rec(k + 1, perm, out);
                perm.swap(k, i);
            }
        }
        rec(0, &mut perm, &mut out);
        out
    }

    /// Least code over every vertex permutation.
    pub fn brute_canonical_code(g: &Graph) -> u128 {
        let n = g.order();
        permutations(n)
            .into_iter()
            .map(|p| {
                let pos: Vec<u8> = p.iter().map(|&x| x as u8).collect();
                code_of(g, &pos)
            })
            .min()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete, complete_bipartite, cycle, fig1h, path, wl8};
    use proptest::prelude::*;

    fn random_perm(n: usize, seed: u64) -> Vec<usize> {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        p
    }

    #[test]
    fn invariant_under_relabeling() {
        for g in [cycle(9), wl8(), fig1h(), complete(7), complete_bipartite(3, 5), path(6)] {
            let base = canonical_form(&g);
            for seed in 0..10 {
                let h = g.relabel(&random_perm(g.order(), seed));
                assert_eq!(canonical_form(&h), base);
            }
            // The representative is isomorphic to the input.
            assert_eq!(canonical_form(&base.graph()), base);
        }
    }

    #[test]
    fn distinguishes_small_non_isomorphic_pairs() {
        // Same degree sequence, different graphs.
        let two_triangles =
            Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&two_triangles), canonical_form(&cycle(6)));
        assert_ne!(canonical_form(&wl8()), canonical_form(&fig1h()));
    }

    #[test]
    fn empty_and_trivial() {
        assert_eq!(canonical_form(&Graph::empty(0)).code, 0);
        assert_eq!(canonical_form(&Graph::empty(1)).graph(), Graph::empty(1));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), pair_count(n)).prop_map(move |bits| {
                graph_from_code(n, bits.iter().fold(0u128, |a, &b| a << 1 | b as u128))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn matches_brute_force_on_pairs(a in arb_graph(6), b in arb_graph(6), seed in any::<u64>()) {
            let same = oracle::brute_canonical_code(&a) == oracle::brute_canonical_code(&b)
                && a.order() == b.order();
            prop_assert_eq!(canonical_form(&a) == canonical_form(&b), same);
            let relabeled = a.relabel(&random_perm(a.order(), seed));
            prop_assert_eq!(canonical_form(&relabeled), canonical_form(&a));
        }

        #[test]
        fn code_round_trips(g in arb_graph(10)) {
            let code = code_of(&g, &(0..g.order() as u8).collect::<Vec<_>>());
            prop_assert_eq!(graph_from_code(g.order(), code), g);
        }
    }
}
