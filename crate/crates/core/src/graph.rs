//! Simple undirected graphs over `0..n` with bit-set adjacency rows.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::{VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("EndpointOutOfRange: edge ({u},{v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },
    #[error("SelfLoop: edge ({0},{0})")]
    SelfLoop(usize),
    #[error("DuplicateEdge: edge ({0},{1}) listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("OrderTooLarge: order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("EmptyFactor: Cartesian product factors must have at least one vertex")]
    EmptyFactor,
    #[error("NotIndependent: vertices {0} and {1} of the given set are adjacent")]
    NotIndependent(usize, usize),
    #[error("VertexOutOfRange: vertex {vertex} is not below the order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("MissingParameter: `{0}` requires an order parameter")]
    MissingParameter(&'static str),
    #[error("InvalidParameter: {0}")]
    InvalidParameter(String),
}

/// Immutable simple graph. Vertices are `0..order()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an explicit edge list. Duplicates are rejected in
    /// either orientation.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        let mut adjacency = vec![VertexSet::new(); order];
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(GraphError::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adjacency[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Self {
            adjacency,
            edge_count: edges.len(),
        })
    }

    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        Self {
            adjacency: vec![VertexSet::new(); order],
            edge_count: 0,
        }
    }

    /// Builds from adjacency rows that are already symmetric and loop-free.
    pub(crate) fn from_rows(adjacency: Vec<VertexSet>) -> Self {
        let twice: usize = adjacency.iter().map(VertexSet::len).sum();
        debug_assert!(adjacency
            .iter()
            .enumerate()
            .all(|(v, row)| !row.contains(v) && row.iter().all(|u| adjacency[u].contains(v))));
        Self {
            adjacency,
            edge_count: twice / 2,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adjacency[v];
        s.insert(v);
        s
    }

    /// `N(S)`: every vertex with a neighbor in `set`. May intersect `set`.
    pub fn set_neighbors(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::new(), |acc, v| acc.union(&self.adjacency[v]))
    }

    /// `N[S]`.
    pub fn closed_set_neighbors(&self, set: &VertexSet) -> VertexSet {
        self.set_neighbors(set).union(set)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(VertexSet::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(VertexSet::len).min().unwrap_or(0)
    }

    /// Edges with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, row) in self.adjacency.iter().enumerate() {
            out.extend(row.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex < self.order() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.order(),
            })
        }
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        match set.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.first_conflict(set).is_none()
    }

    fn first_conflict(&self, set: &VertexSet) -> Option<(usize, usize)> {
        set.iter().find_map(|v| {
            self.adjacency[v]
                .intersection(set)
                .first()
                .map(|u| (v.min(u), v.max(u)))
        })
    }

    /// Independent and dominating.
    pub fn is_maximal_independent(&self, set: &VertexSet) -> bool {
        set.last().map_or(true, |v| v < self.order())
            && self.is_independent(set)
            && self.closed_set_neighbors(set) == self.vertices()
    }

    /// True iff every vertex is reachable from vertex 0. Vacuously true for
    /// order 0 and 1.
    pub fn is_connected(&self) -> bool {
        if self.order() <= 1 {
            return true;
        }
        self.component_of(0).len() == self.order()
    }

    fn component_of(&self, root: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(root);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.set_neighbors(&frontier).difference(&seen);
            seen = seen.union(&next);
            frontier = next;
        }
        seen
    }

    pub fn component_count(&self) -> usize {
        let mut remaining = self.vertices();
        let mut count = 0;
        while let Some(v) = remaining.first() {
            remaining = remaining.difference(&self.component_of(v));
            count += 1;
        }
        count
    }

    /// Length of a shortest `u`-`v` path, `None` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            if frontier.contains(v) {
                return Ok(Some(d));
            }
            let next = self.set_neighbors(&frontier).difference(&seen);
            seen = seen.union(&next);
            frontier = next;
            d += 1;
        }
        Ok(None)
    }

    /// Shortest cycle length, computed by a BFS from every root.
    pub fn girth(&self) -> GirthValue {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // Cycles through the root found deeper than this cannot improve.
                if 2 * dist[u] >= best {
                    break;
                }
                for w in self.adjacency[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            GirthValue::Infinite
        } else {
            GirthValue::Finite(best)
        }
    }

    pub fn is_triangle_free(&self) -> bool {
        self.girth() >= GirthValue::Finite(4)
    }

    /// Contains a 4-cycle as a subgraph (not necessarily induced).
    pub fn contains_c4(&self) -> bool {
        let n = self.order();
        (0..n).any(|u| {
            (u + 1..n).any(|v| self.adjacency[u].intersection_len(&self.adjacency[v]) >= 2)
        })
    }

    /// Leaves: vertices of degree exactly 1.
    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices with at least two leaf neighbors.
    pub fn strong_support_vertices(&self) -> VertexSet {
        let leaves = self.leaves();
        (0..self.order())
            .filter(|&v| self.adjacency[v].intersection_len(&leaves) >= 2)
            .collect()
    }

    /// Subgraph induced on `keep`, relabeled in ascending order. The returned
    /// map sends old indices to new ones.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<Option<usize>>) {
        let mut map = vec![None; self.order()];
        let kept: Vec<usize> = keep.iter().filter(|&v| v < self.order()).collect();
        for (new, &old) in kept.iter().enumerate() {
            map[old] = Some(new);
        }
        let rows = kept
            .iter()
            .map(|&old| {
                self.adjacency[old]
                    .intersection(keep)
                    .iter()
                    .filter_map(|u| map[u])
                    .collect()
            })
            .collect();
        (Graph::from_rows(rows), map)
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        Ok(self.induced_subgraph(&keep))
    }

    /// `G - N[I]` for an independent set `I`.
    pub fn delete_closed_neighborhood(
        &self,
        set: &VertexSet,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        self.check_set(set)?;
        if let Some((u, v)) = self.first_conflict(set) {
            return Err(GraphError::NotIndependent(u, v));
        }
        let keep = self.closed_set_neighbors(set).complement(self.order());
        Ok(self.induced_subgraph(&keep))
    }

    /// Vertices surviving the removal of `N[set]`, in host indices.
    pub fn undominated(&self, set: &VertexSet) -> VertexSet {
        self.closed_set_neighbors(set).complement(self.order())
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut rows = vec![VertexSet::new(); self.order()];
        for (v, row) in self.adjacency.iter().enumerate() {
            rows[perm[v]] = row.iter().map(|u| perm[u]).collect();
        }
        Graph::from_rows(rows)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, E={:?})", self.order(), self.edges())
    }
}

/// `build_graph` under its operational name.
pub fn build_graph(order: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(order, edges)
}

/// Girth of a graph: a finite cycle length, or infinite for forests.
/// `Finite` values order below `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GirthValue {
    Finite(usize),
    Infinite,
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Infinite => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for GirthValue {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "inf" | "infinite" | "infinity" => Ok(GirthValue::Infinite),
            other => match other.parse::<usize>() {
                Ok(g) if g >= 3 => Ok(GirthValue::Finite(g)),
                _ => Err(format!("invalid girth `{other}`: expected an integer >= 3 or `inf`")),
            },
        }
    }
}

/// Row-major vertex labeling of `G □ H`: `(g, h)` is `g * nH + h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProductLabeling {
    pub left_order: usize,
    pub right_order: usize,
}

impl ProductLabeling {
    pub fn order(&self) -> usize {
        self.left_order * self.right_order
    }

    #[inline]
    pub fn encode(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.left_order && h < self.right_order);
        g * self.right_order + h
    }

    #[inline]
    pub fn decode(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.order());
        (index / self.right_order, index % self.right_order)
    }

    /// Vertices of the `H`-layer through `g`; a contiguous range.
    pub fn right_layer(&self, g: usize) -> VertexSet {
        VertexSet::range(g * self.right_order, (g + 1) * self.right_order)
    }

    /// Vertices of the `G`-layer through `h`.
    pub fn left_layer(&self, h: usize) -> VertexSet {
        (0..self.left_order).map(|g| self.encode(g, h)).collect()
    }

    /// `A × B`.
    pub fn pairs(&self, left: &VertexSet, right: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for g in left.iter() {
            for h in right.iter() {
                out.insert(self.encode(g, h));
            }
        }
        out
    }

    /// `A × {h}`; in a prism this is the layer copy of `A`.
    pub fn lift(&self, left: &VertexSet, h: usize) -> VertexSet {
        left.iter().map(|g| self.encode(g, h)).collect()
    }
}

/// `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductLabeling), GraphError> {
    if g.order() == 0 || h.order() == 0 {
        return Err(GraphError::EmptyFactor);
    }
    let labeling = ProductLabeling {
        left_order: g.order(),
        right_order: h.order(),
    };
    let n = labeling.order();
    if n > MAX_ORDER {
        return Err(GraphError::OrderTooLarge(n));
    }
    let mut rows = Vec::with_capacity(n);
    for a in 0..g.order() {
        for b in 0..h.order() {
            let mut row = VertexSet::new();
            for b2 in h.neighbors(b).iter() {
                row.insert(labeling.encode(a, b2));
            }
            for a2 in g.neighbors(a).iter() {
                row.insert(labeling.encode(a2, b));
            }
            rows.push(row);
        }
    }
    Ok((Graph::from_rows(rows), labeling))
}

/// `G □ K2`. Layer 1 is `h = 0`, layer 2 is `h = 1`.
pub fn prism(g: &Graph) -> Result<(Graph, ProductLabeling), GraphError> {
    cartesian_product(g, &crate::named::complete(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{complete, cycle, path, wl8};

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let k2 = build_graph(2, &[(0, 1)]).unwrap();
        assert_eq!(k2, complete(2));
        let c5 = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5, cycle(5));
        assert_eq!(build_graph(3, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            build_graph(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 3, order: 3 })
        );
        assert_eq!(
            build_graph(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        );
        assert_eq!(build_graph(257, &[]), Err(GraphError::OrderTooLarge(257)));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(cycle(5).girth(), GirthValue::Finite(5));
        assert_eq!(path(4).girth(), GirthValue::Infinite);
        assert_eq!(complete(4).girth(), GirthValue::Finite(3));
        assert_eq!(Graph::empty(0).girth(), GirthValue::Infinite);
        assert_eq!(wl8().girth(), GirthValue::Finite(4));
    }

    #[test]
    fn connectivity_examples() {
        assert!(cycle(5).is_connected());
        let two_triangles =
            Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.component_count(), 2);
        assert!(Graph::empty(0).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn distances() {
        let c7 = cycle(7);
        assert_eq!(c7.distance(0, 3).unwrap(), Some(3));
        assert_eq!(c7.distance(0, 5).unwrap(), Some(2));
        assert_eq!(Graph::empty(2).distance(0, 1).unwrap(), None);
        assert!(c7.distance(0, 7).is_err());
    }

    #[test]
    fn product_examples() {
        let (c4, _) = cartesian_product(&complete(2), &complete(2)).unwrap();
        assert_eq!((c4.order(), c4.size()), (4, 4));
        assert!(c4.degrees().iter().all(|&d| d == 2) && c4.is_connected());

        let (pp, lab) = prism(&cycle(5)).unwrap();
        assert_eq!((pp.order(), pp.size()), (10, 15));
        assert_eq!(lab.decode(lab.encode(3, 1)), (3, 1));

        let (k3c4, _) = cartesian_product(&complete(3), &cycle(4)).unwrap();
        assert_eq!((k3c4.order(), k3c4.size()), (12, 24));

        let (ladder, _) = prism(&path(3)).unwrap();
        assert_eq!((ladder.order(), ladder.size()), (6, 7));

        assert_eq!(
            cartesian_product(&Graph::empty(0), &complete(2)),
            Err(GraphError::EmptyFactor)
        );
        assert_eq!(prism(&Graph::empty(0)), Err(GraphError::EmptyFactor));
    }

    #[test]
    fn layers_reproduce_factors() {
        let g = wl8();
        let h = path(3);
        let (p, lab) = cartesian_product(&g, &h).unwrap();
        for a in 0..g.order() {
            let layer = lab.right_layer(a);
            for (b1, b2) in (0..3).flat_map(|x| (0..3).map(move |y| (x, y))) {
                assert!(layer.contains(lab.encode(a, b1)));
                assert_eq!(p.has_edge(lab.encode(a, b1), lab.encode(a, b2)), h.has_edge(b1, b2));
            }
        }
        for b in 0..h.order() {
            let layer = lab.left_layer(b);
            assert_eq!(layer.len(), g.order());
            for (a1, a2) in g.edges() {
                assert!(p.has_edge(lab.encode(a1, b), lab.encode(a2, b)));
            }
        }
    }

    #[test]
    fn closed_neighborhood_deletion() {
        let c5 = cycle(5);
        let (rest, map) = c5
            .delete_closed_neighborhood(&VertexSet::singleton(0))
            .unwrap();
        assert_eq!(rest, path(2));
        assert_eq!(map, vec![None, None, Some(0), Some(1), None]);

        let (same, map) = c5.delete_closed_neighborhood(&VertexSet::new()).unwrap();
        assert_eq!(same, c5);
        assert_eq!(map, (0..5).map(Some).collect::<Vec<_>>());

        let (gone, _) = complete(3)
            .delete_closed_neighborhood(&VertexSet::singleton(0))
            .unwrap();
        assert_eq!(gone.order(), 0);

        let adjacent: VertexSet = [0, 1].into_iter().collect();
        assert_eq!(
            c5.delete_closed_neighborhood(&adjacent),
            Err(GraphError::NotIndependent(0, 1))
        );
    }

    #[test]
    fn strong_supports() {
        assert_eq!(star(3).strong_support_vertices().to_vec(), vec![0]);
        assert!(cycle(5).strong_support_vertices().is_empty());
        assert!(path(4).strong_support_vertices().is_empty());
        // K2: each endpoint has exactly one leaf neighbor.
        assert!(complete(2).strong_support_vertices().is_empty());
    }

    #[test]
    fn c4_detection() {
        assert!(cycle(4).contains_c4());
        assert!(!cycle(5).contains_c4());
        assert!(wl8().contains_c4());
        assert!(complete(4).contains_c4());
    }

    fn arb_graph(max_n: usize) -> impl proptest::strategy::Strategy<Value = Graph> {
        use proptest::prelude::*;
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0.0f64..1.0, n * n.saturating_sub(1) / 2).prop_flat_map(
                move |weights| {
                    (0.05f64..0.6).prop_map(move |p| {
                        let mut edges = Vec::new();
                        let mut k = 0;
                        for u in 0..n {
                            for v in u + 1..n {
                                if weights[k] < p {
                                    edges.push((u, v));
                                }
                                k += 1;
                            }
                        }
                        Graph::new(n, &edges).unwrap()
                    })
                },
            )
        })
    }

    /// Shortest cycle through each edge: the edge plus a shortest path
    /// between its endpoints once the edge is removed.
    fn girth_by_edge_removal(g: &Graph) -> GirthValue {
        let mut best = None::<usize>;
        for (u, v) in g.edges() {
            let rest: Vec<_> = g.edges().into_iter().filter(|&e| e != (u, v)).collect();
            let h = Graph::new(g.order(), &rest).unwrap();
            if let Some(d) = h.distance(u, v).unwrap() {
                best = Some(best.map_or(d + 1, |b| b.min(d + 1)));
            }
        }
        best.map_or(GirthValue::Infinite, GirthValue::Finite)
    }

    proptest::proptest! {
        #[test]
        fn girth_matches_edge_removal_oracle(g in arb_graph(14)) {
            proptest::prop_assert_eq!(g.girth(), girth_by_edge_removal(&g));
            let forest = g.size() + g.component_count() <= g.order();
            proptest::prop_assert_eq!(g.girth() == GirthValue::Infinite, forest);
        }

        #[test]
        fn products_are_simple_with_expected_size(a in arb_graph(7), b in arb_graph(7)) {
            if a.order() > 0 && b.order() > 0 {
                let (p, lab) = cartesian_product(&a, &b).unwrap();
                proptest::prop_assert_eq!(p.size(), a.order() * b.size() + b.order() * a.size());
                for v in 0..p.order() {
                    proptest::prop_assert!(!p.has_edge(v, v));
                    for u in p.neighbors(v).iter() {
                        proptest::prop_assert!(p.has_edge(u, v));
                    }
                    let (g, h) = lab.decode(v);
                    proptest::prop_assert_eq!(lab.encode(g, h), v);
                }
                // Deleting the closed neighborhood of a maximal independent set empties the graph.
                let m = crate::independence::random_maximal_independent_set(&p, 1);
                proptest::prop_assert_eq!(p.delete_closed_neighborhood(&m).unwrap().0.order(), 0);
            }
        }
    }

    #[test]
    fn girth_parse() {
        assert_eq!("inf".parse::<GirthValue>(), Ok(GirthValue::Infinite));
        assert_eq!("5".parse::<GirthValue>(), Ok(GirthValue::Finite(5)));
        assert!("2".parse::<GirthValue>().is_err());
        assert!(GirthValue::Finite(100) < GirthValue::Infinite);
    }
}
