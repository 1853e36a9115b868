//! Convex drawings: a simple graph together with a cyclic vertex order.
//!
//! Two edges cross iff their endpoint positions interleave along the circle.
//! Everything downstream (planarization, the spanning-tree pair, the width
//! and separation bounds) consumes the types defined here.

use crate::error::{Edge, Error, Result};
use crate::graph::{edge, Graph};
use std::collections::BTreeMap;

/// A simple graph whose vertices sit on a circle in a fixed cyclic order.
///
/// `order[p]` is the vertex at cyclic position `p`; increasing position is
/// the "clockwise" direction used throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexDrawing {
    n: usize,
    edges: Vec<Edge>,
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl ConvexDrawing {
    /// Drawing with the identity cyclic order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<ConvexDrawing> {
        ConvexDrawing::with_order(n, edges, (0..n).collect())
    }

    /// Drawing with an explicit cyclic order (`order[p]` = vertex at position `p`).
    pub fn with_order(
        n: usize,
        edges: impl IntoIterator<Item = Edge>,
        order: Vec<usize>,
    ) -> Result<ConvexDrawing> {
        if order.len() != n {
            return Err(Error::InvalidDrawing(format!(
                "order has {} entries, expected {}",
                order.len(),
                n
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidDrawing(format!("order entry {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidDrawing(format!(
                    "order is not a permutation: vertex {v} appears twice"
                )));
            }
            pos[v] = p;
        }
        let mut es = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidDrawing(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidDrawing(format!(
                    "edge ({u}, {v}) has an endpoint out of range"
                )));
            }
            es.push(edge(u, v));
        }
        es.sort_unstable();
        if let Some(w) = es.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidDrawing(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(ConvexDrawing { n, edges: es, order, pos })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonically sorted edge list; indices into it are used by [`CrossingReport`].
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn vertex_at(&self, p: usize) -> usize {
        self.order[p]
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    /// Hull successor: the vertex at the next cyclic position.
    pub fn hull_successor(&self, v: usize) -> usize {
        self.order[(self.pos[v] + 1) % self.n]
    }

    /// True iff `e` joins two cyclically consecutive positions.
    pub fn is_hull_edge(&self, e: Edge) -> bool {
        let d = (self.n + self.pos[e.1] - self.pos[e.0]) % self.n;
        d == 1 || d == self.n - 1
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied())
    }

    /// Endpoint positions of edge `e`, with the smaller position first.
    fn span(&self, e: Edge) -> (usize, usize) {
        let (a, b) = (self.pos[e.0], self.pos[e.1]);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// All pairwise crossings, per-edge counts and the two aggregates.
    pub fn crossings(&self) -> CrossingReport {
        let spans: Vec<(usize, usize)> = self.edges.iter().map(|&e| self.span(e)).collect();
        let m = self.edges.len();
        let mut pairs = Vec::new();
        let mut per_edge = vec![0usize; m];
        for i in 0..m {
            let (a, b) = spans[i];
            for j in i + 1..m {
                let (c, d) = spans[j];
                let interleave = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if interleave {
                    pairs.push((i, j));
                    per_edge[i] += 1;
                    per_edge[j] += 1;
                }
            }
        }
        let k_value = per_edge.iter().copied().max().unwrap_or(0);
        let min_k_value = pairs
            .iter()
            .map(|&(i, j)| per_edge[i].min(per_edge[j]))
            .max()
            .unwrap_or(0);
        CrossingReport { pairs, per_edge, k_value, min_k_value }
    }

    /// Every edge crosses at most `k` others.
    pub fn is_outer_k_planar(&self, k: usize) -> bool {
        self.crossings().k_value <= k
    }

    /// For every crossing, at least one participant crosses at most `k` others.
    pub fn is_outer_min_k_planar(&self, k: usize) -> bool {
        self.crossings().min_k_value <= k
    }

    /// Adds all edges between cyclically consecutive positions, completing the
    /// outer cycle. Hull edges cross nothing, so the per-edge crossing counts
    /// of pre-existing edges are unchanged.
    pub fn hull_complete(&self) -> Result<ConvexDrawing> {
        if self.n < 3 {
            return Err(Error::TrivialInstance);
        }
        let mut es = self.edges.clone();
        for p in 0..self.n {
            es.push(edge(self.order[p], self.order[(p + 1) % self.n]));
        }
        es.sort_unstable();
        es.dedup();
        Ok(ConvexDrawing {
            n: self.n,
            edges: es,
            order: self.order.clone(),
            pos: self.pos.clone(),
        })
    }

    pub fn is_hull_complete(&self) -> bool {
        (0..self.n).all(|p| {
            self.edges
                .binary_search(&edge(self.order[p], self.order[(p + 1) % self.n]))
                .is_ok()
        })
    }

    /// Degree reduction: every vertex of degree >= 4 is replaced by a path of
    /// images sitting on its arc, one image per non-hull neighbor, so the
    /// expanded drawing has maximum degree 3 and identical crossing structure.
    ///
    /// Requires a hull-complete drawing on at least 3 vertices.
    pub fn expand(&self) -> Result<ExpansionResult> {
        if self.n < 3 {
            return Err(Error::TrivialInstance);
        }
        for p in 0..self.n {
            let (u, w) = (self.order[p], self.order[(p + 1) % self.n]);
            if self.edge_index(edge(u, w)).is_none() {
                return Err(Error::NotHullComplete(u, w));
            }
        }

        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }

        // Non-hull neighbors of v in clockwise rotation order. Seen from a
        // point of the circle, the other points appear in the angular order of
        // their cyclic positions starting right after v.
        let chord_rotation = |v: usize| -> Vec<usize> {
            let mut ws: Vec<usize> = adj[v]
                .iter()
                .copied()
                .filter(|&w| !self.is_hull_edge(edge(v, w)))
                .collect();
            ws.sort_unstable_by_key(|&w| (self.n + self.pos[w] - self.pos[v]) % self.n);
            ws
        };

        // Fresh image ids in input-vertex order, then arc order v_1..v_s.
        let mut images: Vec<Vec<usize>> = Vec::with_capacity(self.n);
        let mut origin = Vec::new();
        for v in 0..self.n {
            let s = adj[v].len().saturating_sub(2).max(1);
            let base = origin.len();
            images.push((base..base + s).collect());
            origin.extend(std::iter::repeat(v).take(s));
        }
        let new_n = origin.len();

        // Image attached to a given chord endpoint: the i-th chord in
        // clockwise rotation at v goes to image v_{i+1}.
        let attach: BTreeMap<(usize, usize), usize> = (0..self.n)
            .flat_map(|v| {
                let rot = chord_rotation(v);
                let imgs = &images[v];
                rot.into_iter()
                    .enumerate()
                    .map(move |(i, w)| ((v, w), imgs[i.min(imgs.len() - 1)]))
                    .collect::<Vec<_>>()
            })
            .collect();

        // Images are placed counter-clockwise on v's arc, so in clockwise
        // (increasing position) order the arc reads v_s, ..., v_1.
        let mut new_order = Vec::with_capacity(new_n);
        for p in 0..self.n {
            new_order.extend(images[self.order[p]].iter().rev().copied());
        }

        let mut new_edges = Vec::new();
        for q in 0..new_n {
            new_edges.push(edge(new_order[q], new_order[(q + 1) % new_n]));
        }
        let mut edge_map = BTreeMap::new();
        for &(u, v) in &self.edges {
            if self.is_hull_edge(edge(u, v)) {
                // The hull edge from u to its successor joins u_1 with the
                // successor's v_s.
                let (a, b) = if self.hull_successor(u) == v { (u, v) } else { (v, u) };
                let ne = edge(images[a][0], *images[b].last().unwrap());
                edge_map.insert(edge(u, v), ne);
            } else {
                let ne = edge(attach[&(u, v)], attach[&(v, u)]);
                new_edges.push(ne);
                edge_map.insert(edge(u, v), ne);
            }
        }

        let expanded = ConvexDrawing::with_order(new_n, new_edges, new_order)?;
        Ok(ExpansionResult { expanded, origin, images, edge_map })
    }
}

/// Output of [`ConvexDrawing::crossings`]. Edge indices refer to the
/// drawing's sorted edge list.
#[derive(Debug, Clone)]
pub struct CrossingReport {
    /// Crossing pairs as index pairs `(i, j)` with `i < j`.
    pub pairs: Vec<(usize, usize)>,
    /// `per_edge[i]` = number of edges crossing edge `i`.
    pub per_edge: Vec<usize>,
    /// `max_i per_edge[i]`; the drawing is outer k-planar iff this is <= k.
    pub k_value: usize,
    /// `max over crossing pairs of min(per_edge)`; 0 if there are no crossings.
    pub min_k_value: usize,
}

/// Result of [`ConvexDrawing::expand`].
#[derive(Debug, Clone)]
pub struct ExpansionResult {
    pub expanded: ConvexDrawing,
    /// `origin[x]` = original vertex the expanded vertex `x` stems from.
    pub origin: Vec<usize>,
    /// `images[v]` = expanded vertices replacing `v`, in path order v_1..v_s.
    pub images: Vec<Vec<usize>>,
    /// Original edge -> corresponding expanded edge.
    pub edge_map: BTreeMap<Edge, Edge>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub fn complete_drawing(n: usize) -> ConvexDrawing {
        let mut es = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                es.push((u, v));
            }
        }
        ConvexDrawing::new(n, es).unwrap()
    }

    pub fn cycle_drawing(n: usize) -> ConvexDrawing {
        ConvexDrawing::new(n, (0..n).map(|i| edge(i, (i + 1) % n))).unwrap()
    }

    /// Independent recount of the crossing relation straight from the
    /// definition, used as the oracle for the report's aggregates.
    fn brute_force_counts(d: &ConvexDrawing) -> Vec<usize> {
        let m = d.edges().len();
        let mut counts = vec![0usize; m];
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                let (u1, v1) = d.edges()[i];
                let (u2, v2) = d.edges()[j];
                let (mut a, mut b) = (d.position(u1), d.position(v1));
                let (mut c, mut e) = (d.position(u2), d.position(v2));
                if a > b {
                    std::mem::swap(&mut a, &mut b);
                }
                if c > e {
                    std::mem::swap(&mut c, &mut e);
                }
                if (a < c && c < b && b < e) || (c < a && a < e && e < b) {
                    counts[i] += 1;
                }
            }
        }
        counts
    }

    #[test]
    fn c4_has_no_crossings() {
        let d = cycle_drawing(4);
        let r = d.crossings();
        assert!(r.pairs.is_empty());
        assert_eq!(r.k_value, 0);
    }

    #[test]
    fn k4_has_the_unique_interleaved_pair() {
        let d = complete_drawing(4);
        let r = d.crossings();
        assert_eq!(r.pairs.len(), 1);
        let (i, j) = r.pairs[0];
        assert_eq!(d.edges()[i], (0, 2));
        assert_eq!(d.edges()[j], (1, 3));
        assert_eq!(r.k_value, 1);
        assert!(d.is_outer_k_planar(1));
        assert!(!d.is_outer_k_planar(0));
    }

    #[test]
    fn k5_pentagram() {
        // Frozen from the brute-force recount over all C(10, 2) edge pairs.
        let d = complete_drawing(5);
        let r = d.crossings();
        assert_eq!(r.pairs.len(), 5);
        assert_eq!(r.k_value, 2);
        assert_eq!(r.min_k_value, 2);
        assert_eq!(r.per_edge, brute_force_counts(&d));
    }

    #[test]
    fn hull_complete_path_to_triangle() {
        let d = ConvexDrawing::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let h = d.hull_complete().unwrap();
        assert_eq!(h.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn hull_complete_is_idempotent_on_k4() {
        let d = complete_drawing(4);
        let h = d.hull_complete().unwrap();
        assert_eq!(h.edges(), d.edges());
    }

    #[test]
    fn hull_complete_edgeless_gives_cycle() {
        let d = ConvexDrawing::new(5, Vec::new()).unwrap();
        let h = d.hull_complete().unwrap();
        assert_eq!(h.m(), 5);
        assert!(h.is_hull_complete());
        assert_eq!(h.crossings().k_value, 0);
    }

    #[test]
    fn hull_complete_rejects_tiny() {
        let d = ConvexDrawing::new(2, vec![(0, 1)]).unwrap();
        assert!(matches!(d.hull_complete(), Err(Error::TrivialInstance)));
    }

    #[test]
    fn hull_edges_cross_nothing() {
        let d = complete_drawing(6);
        let r = d.crossings();
        for (i, &e) in d.edges().iter().enumerate() {
            if d.is_hull_edge(e) {
                assert_eq!(r.per_edge[i], 0, "hull edge {e:?} must cross nothing");
            }
        }
    }

    #[test]
    fn expand_identity_on_cycle() {
        let d = cycle_drawing(5);
        let ex = d.expand().unwrap();
        assert_eq!(ex.expanded.n(), 5);
        for v in 0..5 {
            assert_eq!(ex.images[v], vec![v]);
        }
        assert_eq!(ex.expanded.edges(), d.edges());
    }

    #[test]
    fn expand_identity_on_k4() {
        let d = complete_drawing(4);
        let ex = d.expand().unwrap();
        assert_eq!(ex.expanded.n(), 4);
        assert_eq!(ex.expanded.edges(), d.edges());
    }

    #[test]
    fn expand_k5() {
        let d = complete_drawing(5);
        let ex = d.expand().unwrap();
        assert_eq!(ex.expanded.n(), 10);
        assert_eq!(ex.expanded.max_degree(), 3);
        assert!(ex.expanded.is_hull_complete());
        let orig = d.crossings();
        let new = ex.expanded.crossings();
        for (i, &e) in d.edges().iter().enumerate() {
            let ne = ex.edge_map[&e];
            let ni = ex.expanded.edge_index(ne).unwrap();
            assert_eq!(orig.per_edge[i], new.per_edge[ni], "edge {e:?} -> {ne:?}");
        }
        assert_eq!(orig.k_value, new.k_value);
        assert_eq!(orig.min_k_value, new.min_k_value);
    }

    #[test]
    fn expand_requires_hull() {
        let d = ConvexDrawing::new(4, vec![(0, 2)]).unwrap();
        assert!(matches!(d.expand(), Err(Error::NotHullComplete(_, _))));
    }

    #[test]
    fn expand_images_form_arcs_and_paths() {
        let d = complete_drawing(6);
        let ex = d.expand().unwrap();
        for v in 0..6 {
            let imgs = &ex.images[v];
            assert_eq!(imgs.len(), d.degree(v).saturating_sub(2).max(1));
            // Images occupy consecutive cyclic positions.
            let mut ps: Vec<usize> = imgs.iter().map(|&x| ex.expanded.position(x)).collect();
            ps.sort_unstable();
            for w in ps.windows(2) {
                assert_eq!(w[1], w[0] + 1);
            }
            // Consecutive images are joined by an edge.
            for w in imgs.windows(2) {
                assert!(ex.expanded.edge_index(edge(w[0], w[1])).is_some());
            }
            for &x in imgs {
                assert_eq!(ex.origin[x], v);
            }
        }
    }

    fn arbitrary_drawing() -> impl Strategy<Value = ConvexDrawing> {
        (4usize..10)
            .prop_flat_map(|n| {
                let all: Vec<Edge> = (0..n)
                    .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                    .collect();
                (Just(n), proptest::sample::subsequence(all.clone(), 0..=all.len()))
            })
            .prop_map(|(n, es)| ConvexDrawing::new(n, es).unwrap())
    }

    proptest! {
        #[test]
        fn crossing_counts_match_brute_force(d in arbitrary_drawing()) {
            let r = d.crossings();
            prop_assert_eq!(r.per_edge.clone(), brute_force_counts(&d));
            prop_assert!(r.k_value >= r.min_k_value);
            // per_edge(e) equals the number of pairs containing e.
            for (i, &c) in r.per_edge.iter().enumerate() {
                let occurrences = r.pairs.iter().filter(|&&(a, b)| a == i || b == i).count();
                prop_assert_eq!(c, occurrences);
            }
        }

        #[test]
        fn min_k_monotone_and_implied(d in arbitrary_drawing(), k in 0usize..5) {
            if d.is_outer_min_k_planar(k) {
                prop_assert!(d.is_outer_min_k_planar(k + 1));
            }
            if d.is_outer_k_planar(k) {
                prop_assert!(d.is_outer_min_k_planar(k));
            }
        }

        #[test]
        fn expansion_preserves_crossing_counts(d in arbitrary_drawing()) {
            let h = d.hull_complete().unwrap();
            let ex = h.expand().unwrap();
            prop_assert!(ex.expanded.max_degree() <= 3);
            prop_assert!(ex.expanded.is_hull_complete());
            let before = h.crossings();
            let after = ex.expanded.crossings();
            for (i, &e) in h.edges().iter().enumerate() {
                let ni = ex.expanded.edge_index(ex.edge_map[&e]).unwrap();
                prop_assert_eq!(before.per_edge[i], after.per_edge[ni]);
            }
            prop_assert_eq!(before.k_value, after.k_value);
            prop_assert_eq!(before.min_k_value, after.min_k_value);
        }
    }
}
