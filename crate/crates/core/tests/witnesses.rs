use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wellcovered::certificates::{
    verify_certificate, witness_prism_girth5_isolatable_traced, witness_product_isolatable_deg2,
    witness_product_leaf, witness_product_order3, Certificate, PrismCase,
};
use wellcovered::graphio::{enumerate_connected_graphs, EnumFilter};
use wellcovered::independence::{is_well_covered, isolatable_vertices};
use wellcovered::{cartesian_product, prism, GirthValue, Graph};

/// Products up to this order also get an exact well-coveredness check.
const EXACT_PRODUCT_ORDER: usize = 20;
const MAX_PRODUCT_ORDER: usize = 30;

fn connected(n: usize, girth: usize) -> Vec<Graph> {
    let f = EnumFilter::connected(n).min_girth(GirthValue::Finite(girth));
    enumerate_connected_graphs(&f).unwrap().collect()
}

fn triangle_free_upto(n: usize) -> Vec<Graph> {
    (3..=n).flat_map(|k| connected(k, 4)).collect()
}

fn check(product: &Graph, cert: &Certificate) {
    assert!(verify_certificate(product, cert).unwrap(), "{cert}");
    if product.order() <= EXACT_PRODUCT_ORDER {
        assert!(!is_well_covered(product).unwrap(), "{cert}");
    }
}

/// Connected graph with girth at least `girth` and minimum degree at least 2,
/// grown from a random spanning tree by adding random admissible chords.
fn random_high_girth(n: usize, girth: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut g = Graph::new(n, &edges).unwrap();
    for _ in 0..n * n {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || g.has_edge(u, v) {
            continue;
        }
        if g.distance(u, v).unwrap().is_some_and(|d| d + 1 >= girth) {
            edges.push((u.min(v), u.max(v)));
            g = Graph::new(n, &edges).unwrap();
        }
    }
    (g.min_degree() >= 2).then_some(g)
}

/// Reaches the branch where every isolating set of `x = 6` contains `z`.
fn every_isolator_fixture() -> Graph {
    Graph::new(
        17,
        &[
            (0, 1), (0, 2), (0, 3), (0, 9), (1, 15), (2, 5), (2, 8), (2, 10), (2, 12), (3, 4),
            (3, 6), (4, 11), (4, 14), (4, 16), (5, 7), (5, 14), (6, 12), (6, 13), (6, 15),
            (7, 11), (7, 15), (8, 15), (9, 16), (10, 13), (10, 16), (11, 12), (13, 14), (15, 16),
        ],
    )
    .unwrap()
}

#[test]
fn isolatable_deg2_sweep() {
    let pool = triangle_free_upto(9);
    let mut built = 0;
    for g in pool.iter().filter(|g| g.order() <= MAX_PRODUCT_ORDER / 3) {
        let xs: Vec<usize> = isolatable_vertices(g).unwrap().iter().filter(|&x| g.degree(x) >= 2).collect();
        if xs.is_empty() {
            continue;
        }
        for h in pool.iter().filter(|h| g.order() * h.order() <= MAX_PRODUCT_ORDER) {
            let (p, _) = cartesian_product(g, h).unwrap();
            for &x in &xs {
                for s in (0..h.order()).filter(|&s| h.degree(s) >= 2) {
                    check(&p, &witness_product_isolatable_deg2(g, x, h, s).unwrap());
                    built += 1;
                }
            }
        }
    }
    assert!(built > 100, "{built}");
}

#[test]
fn leaf_sweep() {
    let pool = triangle_free_upto(9);
    let partners: Vec<Graph> = (2..=9).flat_map(|n| connected(n, 4)).collect();
    let mut built = 0;
    for g in pool.iter().filter(|g| !g.leaves().is_empty()) {
        for h in partners.iter().filter(|h| g.order() * h.order() <= MAX_PRODUCT_ORDER) {
            let (p, _) = cartesian_product(g, h).unwrap();
            for x in g.leaves() {
                for s in 0..h.order() {
                    check(&p, &witness_product_leaf(g, x, h, s).unwrap());
                    built += 1;
                }
            }
        }
    }
    assert!(built > 100, "{built}");
}

#[test]
fn order3_sweep() {
    let pool: Vec<Graph> = triangle_free_upto(9)
        .into_iter()
        .filter(|g| isolatable_vertices(g).unwrap().is_empty())
        .collect();
    assert!(!pool.is_empty());
    let mut built = 0;
    for g in &pool {
        for h in pool.iter().filter(|h| g.order() * h.order() <= MAX_PRODUCT_ORDER) {
            let (p, _) = cartesian_product(g, h).unwrap();
            for y in 0..g.order() {
                for (s1, s2) in h.edges().into_iter().flat_map(|(a, b)| [(a, b), (b, a)]) {
                    check(&p, &witness_product_order3(g, y, h, s1, s2).unwrap());
                    built += 1;
                }
            }
        }
    }
    assert!(built > 0);
}

#[test]
fn prism_construction_covers_its_branches() {
    let mut pool: Vec<(Graph, Vec<usize>)> = Vec::new();
    for n in 5..=9 {
        let f = EnumFilter::connected(n).min_girth(GirthValue::Finite(5)).min_degree(2);
        pool.extend(enumerate_connected_graphs(&f).unwrap().map(|g| (g, Vec::new())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3000 {
        let n = rng.gen_range(10..=15);
        pool.extend(random_high_girth(n, 5, &mut rng).map(|g| (g, Vec::new())));
    }
    pool.push((every_isolator_fixture(), vec![6]));

    let mut cases = BTreeSet::new();
    for (g, anchors) in &mut pool {
        if anchors.is_empty() {
            *anchors = isolatable_vertices(g).unwrap().to_vec();
        }
        let (p, _) = prism(g).unwrap();
        for &x in anchors.iter() {
            let (cert, case) = witness_prism_girth5_isolatable_traced(g, x)
                .unwrap_or_else(|e| panic!("{:?} x={x}: {e}", g.edges()));
            check(&p, &cert);
            cases.insert(case);
        }
    }
    let all = [
        PrismCase::SingletonNeighborhood,
        PrismCase::DominatedSet,
        PrismCase::TwoUndominatedHighDegree,
        PrismCase::TwoUndominatedFreeEnds,
        PrismCase::EndOutsideOtherSets,
        PrismCase::MirroredEndOutsideOtherSets,
        PrismCase::IsolatorAvoidsZ,
        PrismCase::EveryIsolatorContainsZ,
        PrismCase::OnePerSetNonadjacent,
        PrismCase::OnePerSetAdjacent,
    ];
    assert_eq!(cases, all.into_iter().collect::<BTreeSet<_>>());
}

#[test]
fn fixture_takes_the_every_isolator_branch() {
    let (_, case) = witness_prism_girth5_isolatable_traced(&every_isolator_fixture(), 6).unwrap();
    assert_eq!(case, PrismCase::EveryIsolatorContainsZ);
}
