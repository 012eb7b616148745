//! Strong-support witnesses for products of triangle-free factors.
//!
//! Each builder assembles an independent set `J` of the product such that
//! `G □ H - N[J]` has a vertex adjacent to two leaves, then checks the result
//! with [`verify_certificate`] before returning it. Products use the row-major
//! labeling `(g, h) -> g * |V(H)| + h`; in a prism, layer 1 is `h = 0` and
//! layer 2 is `h = 1`.

use serde::Serialize;

use super::{verify_certificate, Certificate, CertificateError, Factor, Hypothesis};
use crate::bitset::VertexSet;
use crate::graph::{cartesian_product, GirthValue, Graph, ProductLabeling};
use crate::independence::{enumerate_mis, isolatable, isolatable_vertices, isolating_set_avoiding};

const LAYER_1: usize = 0;
const LAYER_2: usize = 1;

fn violated(h: Hypothesis) -> CertificateError {
    CertificateError::PreconditionViolated(h)
}

fn require_connected(g: &Graph, factor: Factor) -> Result<(), CertificateError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(violated(Hypothesis::NotConnected(factor)))
    }
}

fn require_order(g: &Graph, factor: Factor, min: usize) -> Result<(), CertificateError> {
    if g.order() >= min {
        Ok(())
    } else {
        Err(violated(Hypothesis::OrderTooSmall { factor, min }))
    }
}

fn require_girth(g: &Graph, factor: Factor, min: usize) -> Result<(), CertificateError> {
    if g.girth() >= GirthValue::Finite(min) {
        Ok(())
    } else {
        Err(violated(Hypothesis::GirthTooSmall { factor, min }))
    }
}

fn require_degree(g: &Graph, factor: Factor, vertex: usize, min: usize) -> Result<(), CertificateError> {
    if g.degree(vertex) >= min {
        Ok(())
    } else {
        Err(violated(Hypothesis::DegreeTooSmall { factor, vertex, min }))
    }
}

/// Connected, at least `min_order` vertices, girth at least 4.
fn triangle_free_factor(g: &Graph, factor: Factor, min_order: usize) -> Result<(), CertificateError> {
    require_connected(g, factor)?;
    require_order(g, factor, min_order)?;
    require_girth(g, factor, 4)
}

fn isolating_set_for(g: &Graph, x: usize) -> Result<VertexSet, CertificateError> {
    if let Some(j) = isolatable(g, x)? {
        return Ok(j);
    }
    if isolatable_vertices(g)?.is_empty() {
        Err(violated(Hypothesis::NoIsolatableVertex))
    } else {
        Err(violated(Hypothesis::NotIsolatable(x)))
    }
}

/// Lexicographically least maximal independent set of `g[keep]`, in host
/// indices.
fn least_maximal_set_within(g: &Graph, keep: &VertexSet) -> Result<VertexSet, CertificateError> {
    let (sub, map) = g.induced_subgraph(keep);
    let back: Vec<usize> = (0..g.order()).filter(|&v| map[v].is_some()).collect();
    let least = enumerate_mis(&sub)?
        .min()
        .expect("every graph has a maximal independent set");
    Ok(least.iter().map(|v| back[v]).collect())
}

fn lowest(set: &VertexSet, what: &str) -> Result<usize, CertificateError> {
    set.first()
        .ok_or_else(|| CertificateError::ProofInvariantBroken(format!("{what} is empty")))
}

fn checked(product: &Graph, cert: Certificate, route: &str) -> Result<Certificate, CertificateError> {
    if verify_certificate(product, &cert)? {
        Ok(cert)
    } else {
        Err(CertificateError::ProofInvariantBroken(format!(
            "{route} produced a certificate the verifier rejects: {cert}"
        )))
    }
}

/// `G` has an isolatable vertex `x` of degree at least 2 and `s` has at least
/// two neighbors in `H`; both factors connected, order at least 3, girth at
/// least 4. The support is `(x, s)` with leaves `(x, t1)`, `(x, t2)` for the
/// two lowest-indexed neighbors of `s`, ordered by degree.
pub fn witness_product_isolatable_deg2(
    g: &Graph,
    x: usize,
    h: &Graph,
    s: usize,
) -> Result<Certificate, CertificateError> {
    g.check_vertex(x)?;
    h.check_vertex(s)?;
    triangle_free_factor(g, Factor::G, 3)?;
    triangle_free_factor(h, Factor::H, 3)?;
    let isolator = isolating_set_for(g, x)?;
    require_degree(g, Factor::G, x, 2)?;
    require_degree(h, Factor::H, s, 2)?;

    let mut ys = g.neighbors(x).iter();
    let (y1, y2) = (ys.next().unwrap(), ys.next().unwrap());
    let mut ts = h.neighbors(s).iter();
    let (mut t1, mut t2) = (ts.next().unwrap(), ts.next().unwrap());
    if h.degree(t1) > h.degree(t2) {
        std::mem::swap(&mut t1, &mut t2);
    }

    let (product, lab) = cartesian_product(g, h)?;
    let pair: VertexSet = [t1, t2].into_iter().collect();
    let mut j = lab.pairs(&isolator, &pair);
    let without_s = |set: VertexSet| {
        let mut set = set;
        set.remove(s);
        set
    };
    if h.degree(t1) == 1 && h.degree(t2) > 1 {
        j = j.union(&lab.pairs(&VertexSet::singleton(y1), &without_s(*h.neighbors(t2))));
    } else if h.degree(t1) > 1 {
        let t = without_s(h.set_neighbors(&pair));
        let a = t.difference(h.neighbors(t2));
        let b = t.difference(&a);
        j = j
            .union(&lab.pairs(&VertexSet::singleton(y1), &a))
            .union(&lab.pairs(&VertexSet::singleton(y2), &b));
    }
    let cert = Certificate::strong_support(j, lab.encode(x, s), lab.encode(x, t1), lab.encode(x, t2));
    checked(&product, cert, "isolatable-vertex construction")
}

/// `x` is a leaf of `G` (connected, order at least 3, girth at least 4) and
/// `H` is nontrivial, connected and triangle-free. The support is `(x, s)`
/// with leaves `(y, s)` and `(x, t1)`, where `y` supports `x` and `t1` is the
/// lowest-indexed neighbor of `s`.
pub fn witness_product_leaf(
    g: &Graph,
    x: usize,
    h: &Graph,
    s: usize,
) -> Result<Certificate, CertificateError> {
    g.check_vertex(x)?;
    h.check_vertex(s)?;
    triangle_free_factor(g, Factor::G, 3)?;
    triangle_free_factor(h, Factor::H, 2)?;
    if g.leaves().is_empty() {
        return Err(violated(Hypothesis::NoLeaf));
    }
    if g.degree(x) != 1 {
        return Err(violated(Hypothesis::NotALeaf(x)));
    }
    let y = g.neighbors(x).first().unwrap();
    let mut others = *g.neighbors(y);
    others.remove(x);
    let t1 = h.neighbors(s).first().unwrap();
    let a = if h.degree(t1) == 1 {
        VertexSet::new()
    } else {
        let mut a = *h.neighbors(t1);
        a.remove(s);
        a
    };

    let (product, lab) = cartesian_product(g, h)?;
    let j = lab
        .pairs(&others, h.neighbors(s))
        .union(&lab.pairs(&VertexSet::singleton(y), &a));
    let cert = Certificate::strong_support(j, lab.encode(x, s), lab.encode(y, s), lab.encode(x, t1));
    checked(&product, cert, "leaf construction")
}

/// Both factors connected, order at least 3, girth at least 4, with no
/// isolatable vertex; `s1 s2` is an edge of `H`. Takes the least maximal
/// independent set `I` of `G - N[y]`, which must leave exactly an edge `xy`
/// undominated. The support is `(y, s1)` with leaves `(y, s2)`, `(x, s1)`.
pub fn witness_product_order3(
    g: &Graph,
    y: usize,
    h: &Graph,
    s1: usize,
    s2: usize,
) -> Result<Certificate, CertificateError> {
    g.check_vertex(y)?;
    h.check_vertex(s1)?;
    h.check_vertex(s2)?;
    triangle_free_factor(g, Factor::G, 3)?;
    triangle_free_factor(h, Factor::H, 3)?;
    if !isolatable_vertices(g)?.is_empty() {
        return Err(violated(Hypothesis::IsolatableVertexPresent(Factor::G)));
    }
    if !isolatable_vertices(h)?.is_empty() {
        return Err(violated(Hypothesis::IsolatableVertexPresent(Factor::H)));
    }
    if !h.has_edge(s1, s2) {
        return Err(violated(Hypothesis::NotAdjacent(s1, s2)));
    }

    let outside = g.closed_neighbors(y).complement(g.order());
    let i = least_maximal_set_within(g, &outside)?;
    let rest = g.undominated(&i);
    let x = rest.difference(&VertexSet::singleton(y)).first();
    let x = match x {
        Some(x) if rest.len() == 2 && rest.contains(y) && g.has_edge(x, y) => x,
        _ => {
            return Err(CertificateError::ProofInvariantBroken(format!(
                "G - N[I] for I = {i} is {rest}, not a single edge through {y}"
            )))
        }
    };
    let mut beyond_x = *g.neighbors(x);
    beyond_x.remove(y);
    let w = lowest(&beyond_x, "N(x) - y")?;
    let mut ts = *h.neighbors(s2);
    ts.remove(s1);
    let mut zs = *h.neighbors(s1);
    zs.remove(s2);

    let (product, lab) = cartesian_product(g, h)?;
    let j = lab
        .lift(&i, s1)
        .union(&lab.pairs(g.neighbors(y), &ts))
        .union(&lab.pairs(&VertexSet::singleton(w), &zs));
    let cert = Certificate::strong_support(j, lab.encode(y, s1), lab.encode(y, s2), lab.encode(x, s1));
    checked(&product, cert, "order-3 construction")
}

/// Branch of the prism construction that produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PrismCase {
    /// Some neighbor of `x` has degree 2.
    SingletonNeighborhood,
    /// `I` dominates one of the sets `A_i`.
    DominatedSet,
    /// Two undominated vertices of some `A_i`, one of degree above 2.
    TwoUndominatedHighDegree,
    /// Both of degree 2 with nonadjacent outer neighbors `z`, `w`.
    TwoUndominatedFreeEnds,
    /// `wz` is an edge and `z` lies in no other `A_j`.
    EndOutsideOtherSets,
    /// `wz` is an edge, `z` lies in another `A_j`, `w` in none.
    MirroredEndOutsideOtherSets,
    /// `z`, `w` in distinct other sets; some isolating set avoids `z`.
    IsolatorAvoidsZ,
    /// `z`, `w` in distinct other sets; every isolating set contains `z`.
    EveryIsolatorContainsZ,
    /// One undominated vertex per `A_i`, two of them nonadjacent.
    OnePerSetNonadjacent,
    /// `deg(x) = 2` and the two undominated vertices are adjacent.
    OnePerSetAdjacent,
}

/// `G` connected with girth at least 5 and minimum degree at least 2, `x`
/// isolatable. Builds a strong-support certificate on `G □ K2`.
pub fn witness_prism_girth5_isolatable(g: &Graph, x: usize) -> Result<Certificate, CertificateError> {
    witness_prism_girth5_isolatable_traced(g, x).map(|(c, _)| c)
}

/// [`witness_prism_girth5_isolatable`] together with the branch taken.
pub fn witness_prism_girth5_isolatable_traced(
    g: &Graph,
    x: usize,
) -> Result<(Certificate, PrismCase), CertificateError> {
    g.check_vertex(x)?;
    require_girth(g, Factor::G, 5)?;
    require_connected(g, Factor::G)?;
    require_order(g, Factor::G, 2)?;
    let isolator = isolatable(g, x)?.ok_or(violated(Hypothesis::NotIsolatable(x)))?;
    if g.min_degree() < 2 {
        return Err(violated(Hypothesis::UseLeafRoute));
    }
    let (product, lab) = crate::graph::prism(g)?;
    let (cert, case) = PrismBuilder::new(g, x, isolator, lab).build()?;
    Ok((checked(&product, cert, &format!("prism construction ({case:?})"))?, case))
}

struct PrismBuilder<'g> {
    g: &'g Graph,
    x: usize,
    isolator: VertexSet,
    lab: ProductLabeling,
    ys: Vec<usize>,
    a: Vec<VertexSet>,
}

impl<'g> PrismBuilder<'g> {
    fn new(g: &'g Graph, x: usize, isolator: VertexSet, lab: ProductLabeling) -> Self {
        let ys = g.neighbors(x).to_vec();
        let a = ys
            .iter()
            .map(|&y| {
                let mut s = *g.neighbors(y);
                s.remove(x);
                s
            })
            .collect();
        Self { g, x, isolator, lab, ys, a }
    }

    fn v(&self, vertex: usize, layer: usize) -> usize {
        self.lab.encode(vertex, layer)
    }

    fn lift(&self, set: &VertexSet, layer: usize) -> VertexSet {
        self.lab.lift(set, layer)
    }

    /// `J ∩ A_i` over every `i`.
    fn isolator_in_sets(&self, j: &VertexSet) -> VertexSet {
        self.a.iter().fold(VertexSet::new(), |acc, ai| acc.union(&ai.intersection(j)))
    }

    fn other_sets(&self, i: usize) -> VertexSet {
        self.a
            .iter()
            .enumerate()
            .filter(|&(l, _)| l != i)
            .fold(VertexSet::new(), |acc, (_, al)| acc.union(al))
    }

    fn set_index_of(&self, v: usize) -> Option<usize> {
        self.a.iter().position(|al| al.contains(v))
    }

    fn build(&self) -> Result<(Certificate, PrismCase), CertificateError> {
        let x = self.x;
        if let Some(i) = self.a.iter().position(|ai| ai.len() == 1) {
            // The isolating set must contain the lone vertex of A_i.
            let cert = Certificate::strong_support(
                self.lift(&self.isolator, LAYER_2),
                self.v(x, LAYER_1),
                self.v(self.ys[i], LAYER_1),
                self.v(x, LAYER_2),
            );
            return Ok((cert, PrismCase::SingletonNeighborhood));
        }

        let ny = self.g.neighbors(x);
        let outside = self.g.closed_set_neighbors(ny).complement(self.g.order());
        let i_set = least_maximal_set_within(self.g, &outside)?;
        let dominated = self.g.set_neighbors(&i_set);
        let undominated: Vec<VertexSet> = self.a.iter().map(|ai| ai.difference(&dominated)).collect();

        if let Some(i) = undominated.iter().position(VertexSet::is_empty) {
            let s = self
                .lift(&i_set, LAYER_1)
                .union(&self.lift(&self.isolator_in_sets(&self.isolator), LAYER_2));
            let cert = Certificate::strong_support(
                s,
                self.v(x, LAYER_1),
                self.v(self.ys[i], LAYER_1),
                self.v(x, LAYER_2),
            );
            return Ok((cert, PrismCase::DominatedSet));
        }

        if let Some(i) = undominated.iter().position(|u| u.len() >= 2) {
            return self.two_undominated(i, &i_set, &undominated[i]);
        }

        self.one_per_set(&i_set, &undominated)
    }

    fn two_undominated(
        &self,
        i: usize,
        i_set: &VertexSet,
        undominated: &VertexSet,
    ) -> Result<(Certificate, PrismCase), CertificateError> {
        let g = self.g;
        let yi = self.ys[i];
        let mut it = undominated.iter();
        let (a1, b1) = (it.next().unwrap(), it.next().unwrap());
        let outer = |v: usize| {
            let mut s = *g.neighbors(v);
            s.remove(yi);
            s
        };
        let others_y: VertexSet = self.ys.iter().copied().filter(|&y| y != yi).collect();

        // Layer-2 pair {w, z}: a1¹ and b1¹ become leaves at yi¹.
        let standard = |w: usize, z: usize, case: PrismCase| {
            let s = self
                .lift(i_set, LAYER_1)
                .union(&self.lift(&others_y, LAYER_1))
                .union(&self.lift(&[w, z].into_iter().collect(), LAYER_2));
            let cert = Certificate::strong_support(s, self.v(yi, LAYER_1), self.v(a1, LAYER_1), self.v(b1, LAYER_1));
            Ok((cert, case))
        };

        for (high, low) in [(a1, b1), (b1, a1)] {
            if g.degree(high) > 2 {
                let w = lowest(&outer(low), "N(b1) - y")?;
                let z = lowest(&outer(high).difference(g.neighbors(w)), "N(a1) - y - N(w)")?;
                return standard(w, z, PrismCase::TwoUndominatedHighDegree);
            }
        }

        let z = lowest(&outer(a1), "N(a1) - y")?;
        let w = lowest(&outer(b1), "N(b1) - y")?;
        if !g.has_edge(w, z) {
            return standard(w, z, PrismCase::TwoUndominatedFreeEnds);
        }

        let elsewhere = self.other_sets(i);
        let other_y = *others_y
            .iter()
            .collect::<Vec<_>>()
            .first()
            .ok_or_else(|| CertificateError::ProofInvariantBroken("x has a single neighbor".into()))?;
        let in_ai = self.a[i];
        // M¹ ∪ {end², y²}: `leaf`¹ and x¹ become leaves at yi¹.
        let via_end = |j: &VertexSet, end: usize, dominator: usize, leaf: usize, case: PrismCase| {
            let mut m = j.difference(&in_ai);
            m.remove(end);
            let s = self
                .lift(&m, LAYER_1)
                .union(&self.lift(&[end, dominator].into_iter().collect(), LAYER_2));
            let cert = Certificate::strong_support(s, self.v(yi, LAYER_1), self.v(leaf, LAYER_1), self.v(self.x, LAYER_1));
            Ok((cert, case))
        };

        if !elsewhere.contains(z) {
            return via_end(&self.isolator, z, other_y, a1, PrismCase::EndOutsideOtherSets);
        }
        if !elsewhere.contains(w) {
            return via_end(&self.isolator, w, other_y, b1, PrismCase::MirroredEndOutsideOtherSets);
        }
        let p = self.set_index_of(z).unwrap();
        let q = self.set_index_of(w).unwrap();
        if p == q {
            return Err(CertificateError::ProofInvariantBroken(format!(
                "adjacent vertices {z} and {w} share the independent set A_{p}"
            )));
        }
        match isolating_set_avoiding(g, self.x, &VertexSet::singleton(z))? {
            Some(j) => via_end(&j, z, self.ys[q], a1, PrismCase::IsolatorAvoidsZ),
            None => via_end(&self.isolator, w, self.ys[p], b1, PrismCase::EveryIsolatorContainsZ),
        }
    }

    fn one_per_set(
        &self,
        i_set: &VertexSet,
        undominated: &[VertexSet],
    ) -> Result<(Certificate, PrismCase), CertificateError> {
        let g = self.g;
        let picks: Vec<usize> = undominated.iter().map(|u| u.first().unwrap()).collect();
        let k = picks.len();
        let pair = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .find(|&(i, j)| !g.has_edge(picks[i], picks[j]));
        if let Some((i, j)) = pair {
            let s = self
                .lift(i_set, LAYER_1)
                .union(&self.lift(&[picks[i], picks[j]].into_iter().collect(), LAYER_2));
            let cert = Certificate::strong_support(
                s,
                self.v(self.x, LAYER_1),
                self.v(self.ys[i], LAYER_1),
                self.v(self.ys[j], LAYER_1),
            );
            return Ok((cert, PrismCase::OnePerSetNonadjacent));
        }
        if k != 2 {
            return Err(CertificateError::ProofInvariantBroken(format!(
                "the {k} undominated vertices are pairwise adjacent"
            )));
        }
        let (a1, a2) = (picks[0], picks[1]);
        let mut rest_of_a2 = self.a[1];
        rest_of_a2.remove(a2);
        let t = lowest(&rest_of_a2, "A_2 - a_2")?;
        let s = self
            .lift(i_set, LAYER_1)
            .union(&VertexSet::from_iter([
                self.v(a2, LAYER_1),
                self.v(a1, LAYER_2),
                self.v(t, LAYER_2),
            ]));
        let cert = Certificate::strong_support(
            s,
            self.v(self.x, LAYER_1),
            self.v(self.ys[0], LAYER_1),
            self.v(self.x, LAYER_2),
        );
        Ok((cert, PrismCase::OnePerSetAdjacent))
    }
}
