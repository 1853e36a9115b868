//! Generators for the lower-bound families: grids, the graphs G_k built from
//! two grids, their stretched variants F_k with prescribed convex drawings,
//! stacked prisms, the G_k brambles, and a seeded source of random outer
//! min-k-planar test drawings.

use crate::drawing::ConvexDrawing;
use crate::error::Edge;
use crate::graph::{edge, Graph};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The m x n grid: vertices (i, j) with 1 <= i <= m rows, 1 <= j <= n
/// columns, row-major ids, edges between orthogonal neighbors.
pub fn gen_grid(m: usize, n: usize) -> Graph {
    assert!(m >= 1 && n >= 1);
    let id = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut edges = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            if j < n {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i < m {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    Graph::new(m * n, edges)
}

/// Vertex ids of G_k: the 2k x 2k grid Q_k row-major, then the
/// 2k(k+1) x k grid R_k row-major.
#[derive(Debug, Clone, Copy)]
pub struct GkIds {
    pub k: usize,
}

impl GkIds {
    pub fn v(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= 2 * self.k && 1 <= j && j <= 2 * self.k);
        (i - 1) * 2 * self.k + (j - 1)
    }

    pub fn u(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i <= 2 * self.k * (self.k + 1) && 1 <= j && j <= self.k);
        4 * self.k * self.k + (i - 1) * self.k + (j - 1)
    }

    pub fn n(&self) -> usize {
        4 * self.k * self.k + 2 * self.k * self.k * (self.k + 1)
    }
}

/// The graph G_k: Q_k and R_k glued by the fan edges from the last Q column
/// to the first R column.
pub fn gen_gk(k: usize) -> Graph {
    assert!(k >= 1);
    let ids = GkIds { k };
    let mut edges = gk_grid_edges(&ids);
    for i in 1..=2 * k {
        for j in 1..=k + 1 {
            edges.push((ids.v(i, 2 * k), ids.u((i - 1) * (k + 1) + j, 1)));
        }
    }
    Graph::new(ids.n(), edges)
}

fn gk_grid_edges(ids: &GkIds) -> Vec<Edge> {
    let k = ids.k;
    let mut edges = Vec::new();
    for i in 1..=2 * k {
        for j in 1..=2 * k {
            if j < 2 * k {
                edges.push(edge(ids.v(i, j), ids.v(i, j + 1)));
            }
            if i < 2 * k {
                edges.push(edge(ids.v(i, j), ids.v(i + 1, j)));
            }
        }
    }
    for i in 1..=2 * k * (k + 1) {
        for j in 1..=k {
            if j < k {
                edges.push(edge(ids.u(i, j), ids.u(i, j + 1)));
            }
            if i < 2 * k * (k + 1) {
                edges.push(edge(ids.u(i, j), ids.u(i + 1, j)));
            }
        }
    }
    edges
}

/// Vertex inventory and id scheme of F_k: the Q block, the R block, then the
/// Z paths and W paths, block by block. The id scheme is stable so golden
/// files stay portable.
#[derive(Debug, Clone)]
pub struct FkLayout {
    pub k: usize,
    z_off: Vec<usize>,
    w_off: Vec<usize>,
    n: usize,
}

/// Classification of the edges of F_k, mirroring the eleven kinds that the
/// drawing's per-edge crossing caps are stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FkEdgeType {
    /// Q column edges inside the upper or lower half.
    ColumnHalf,
    /// Q column edges joining the two halves (row k to row k+1).
    ColumnMiddle,
    /// Q row edges.
    Row,
    /// v_{i,2k} to z_{i,0}.
    VZ,
    /// End of Z_i to its W_i endpoint.
    ZW,
    /// z_{i,0} to z_{i,1}, away from the middle rows.
    ZFirst,
    /// Remaining Z path edges.
    ZRest,
    /// W path edges.
    W,
    /// w_{i,j} down to the first R column.
    WU,
    /// R row edges.
    RRow,
    /// R column edges.
    RColumn,
}

impl FkLayout {
    pub fn new(k: usize) -> FkLayout {
        assert!(k >= 1);
        let gk = GkIds { k };
        let mut off = gk.n();
        let mut z_off = vec![0; 2 * k + 1];
        for i in 1..=2 * k {
            z_off[i] = off;
            off += Self::ell_of(k, i) + 1;
        }
        let mut w_off = vec![0; 2 * k + 1];
        for i in 1..=2 * k {
            w_off[i] = off;
            off += k + 1;
        }
        FkLayout { k, z_off, w_off, n: off }
    }

    fn ell_of(k: usize, i: usize) -> usize {
        if i <= k {
            (k - i) * (k + 1)
        } else {
            (i - k - 1) * (k + 1)
        }
    }

    /// Length of the path Z_i.
    pub fn ell(&self, i: usize) -> usize {
        Self::ell_of(self.k, i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn gk_ids(&self) -> GkIds {
        GkIds { k: self.k }
    }

    pub fn v(&self, i: usize, j: usize) -> usize {
        self.gk_ids().v(i, j)
    }

    pub fn u(&self, i: usize, j: usize) -> usize {
        self.gk_ids().u(i, j)
    }

    pub fn z(&self, i: usize, b: usize) -> usize {
        debug_assert!(b <= self.ell(i));
        self.z_off[i] + b
    }

    pub fn w(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= j && j <= self.k + 1);
        self.w_off[i] + (j - 1)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let k = self.k;
        let mut edges = gk_grid_edges(&self.gk_ids());
        for i in 1..=2 * k {
            for b in 0..self.ell(i) {
                edges.push(edge(self.z(i, b), self.z(i, b + 1)));
            }
            for j in 1..=k {
                edges.push(edge(self.w(i, j), self.w(i, j + 1)));
            }
            edges.push(edge(self.v(i, 2 * k), self.z(i, 0)));
            let w_end = if i <= k { self.w(i, k + 1) } else { self.w(i, 1) };
            edges.push(edge(self.z(i, self.ell(i)), w_end));
            for j in 1..=k + 1 {
                edges.push(edge(self.w(i, j), self.u((i - 1) * (k + 1) + j, 1)));
            }
        }
        edges
    }

    /// The cyclic order of the outer (2k-1)-planar drawing: the upper half of
    /// Q column by column, the z_{i,0} block, the groups k..1, the rows of
    /// R_k, and the mirrored lower half.
    pub fn cyclic_order(&self) -> Vec<usize> {
        let k = self.k;
        let mut upper: Vec<usize> = Vec::new();
        for j in 1..=2 * k {
            for i in (1..=k).rev() {
                upper.push(self.v(i, j));
            }
        }
        for i in (1..=k).rev() {
            upper.push(self.z(i, 0));
        }
        for group in (1..=k).rev() {
            if group == 1 {
                for j in (1..=k + 1).rev() {
                    upper.push(self.w(1, j));
                }
            } else {
                let i = group;
                let base = (k - i) * (k + 1);
                for t in 0..=k {
                    upper.push(self.w(i, k + 1 - t));
                    for a in (1..i).rev() {
                        upper.push(self.z(a, base + 1 + t));
                    }
                }
            }
        }

        // Lower-half identity of an upper vertex at the mirrored position.
        let mirror = |x: usize| -> usize {
            let k2 = 2 * k;
            if x < self.gk_ids().n() {
                // Inside the Q block (R vertices never occur in `upper`).
                let i = x / k2 + 1;
                let j = x % k2 + 1;
                self.v(2 * k + 1 - i, j)
            } else if x < self.w_off[1] {
                let i = (1..=k).find(|&i| x < self.z_off[i] + self.ell(i) + 1).unwrap();
                let b = x - self.z_off[i];
                self.z(2 * k + 1 - i, b)
            } else {
                let i = (1..=k).find(|&i| x < self.w_off[i] + k + 1).unwrap();
                let j = x - self.w_off[i] + 1;
                self.w(2 * k + 1 - i, k + 2 - j)
            }
        };

        let mut order = upper.clone();
        for i in 1..=2 * k * (k + 1) {
            for j in 1..=k {
                order.push(self.u(i, j));
            }
        }
        order.extend(upper.iter().rev().map(|&x| mirror(x)));
        order
    }

    pub fn drawing(&self) -> ConvexDrawing {
        ConvexDrawing::with_order(self.n, self.edges(), self.cyclic_order())
            .expect("the F_k layout is a valid drawing")
    }

    pub fn classify(&self, e: Edge) -> FkEdgeType {
        let k = self.k;
        let kind = |x: usize| -> (u8, usize, usize) {
            if x < self.gk_ids().n() {
                if x < 4 * k * k {
                    (0, x / (2 * k) + 1, x % (2 * k) + 1) // V(i, j)
                } else {
                    let y = x - 4 * k * k;
                    (1, y / k + 1, y % k + 1) // U(i, j)
                }
            } else if x < self.w_off[1] {
                let i = (1..=2 * k).find(|&i| x < self.z_off[i] + self.ell(i) + 1).unwrap();
                (2, i, x - self.z_off[i]) // Z(i, b)
            } else {
                let i = (1..=2 * k).find(|&i| x < self.w_off[i] + k + 1).unwrap();
                (3, i, x - self.w_off[i] + 1) // W(i, j)
            }
        };
        let (a, b) = (kind(e.0), kind(e.1));
        match (a.0, b.0) {
            (0, 0) => {
                let (i1, i2) = (a.1, b.1);
                if i1 == i2 {
                    FkEdgeType::Row
                } else if i1.min(i2) == k && i1.max(i2) == k + 1 {
                    FkEdgeType::ColumnMiddle
                } else {
                    FkEdgeType::ColumnHalf
                }
            }
            (0, 2) | (2, 0) => FkEdgeType::VZ,
            (2, 2) => {
                let (i, b1) = (a.1, a.2.min(b.2));
                if b1 == 0 && i != k && i != k + 1 {
                    FkEdgeType::ZFirst
                } else {
                    FkEdgeType::ZRest
                }
            }
            (2, 3) | (3, 2) => FkEdgeType::ZW,
            (3, 3) => FkEdgeType::W,
            (3, 1) | (1, 3) => FkEdgeType::WU,
            (1, 1) => {
                if a.1 == b.1 {
                    FkEdgeType::RRow
                } else {
                    FkEdgeType::RColumn
                }
            }
            _ => unreachable!("no such edge in F_k"),
        }
    }

    /// Per-edge crossing cap proved for each edge type.
    pub fn type_cap(&self, t: FkEdgeType) -> usize {
        let k = self.k;
        match t {
            FkEdgeType::ColumnHalf | FkEdgeType::RRow => 0,
            FkEdgeType::ColumnMiddle | FkEdgeType::VZ | FkEdgeType::ZW | FkEdgeType::W
            | FkEdgeType::WU => 2 * (k - 1),
            FkEdgeType::Row | FkEdgeType::RColumn => 2 * (k - 1) + 1,
            FkEdgeType::ZFirst | FkEdgeType::ZRest => 2 * k.saturating_sub(2) + 3,
        }
    }

    /// Vertex classes whose contraction recovers G_k: each Z_i, W_i and
    /// v_{i,2k} collapse into the class of v_{i,2k}; everything else keeps
    /// its own class. Class ids equal the G_k vertex ids.
    pub fn contraction_classes(&self) -> (Vec<usize>, usize) {
        let k = self.k;
        let gk = self.gk_ids();
        let mut class = vec![usize::MAX; self.n];
        for x in 0..gk.n() {
            class[x] = x;
        }
        for i in 1..=2 * k {
            let target = gk.v(i, 2 * k);
            for b in 0..=self.ell(i) {
                class[self.z(i, b)] = target;
            }
            for j in 1..=k + 1 {
                class[self.w(i, j)] = target;
            }
        }
        (class, gk.n())
    }
}

/// The prescribed drawing of F_k: outer (2k-1)-planar, with G_k as a minor
/// via contraction of the attached paths.
pub fn gen_fk(k: usize) -> ConvexDrawing {
    FkLayout::new(k).drawing()
}

/// Stacked prism Y_{m,n}: the m x n grid plus the first-to-last row edges,
/// drawn with the rows placed consecutively. Row edges cross nothing, column
/// edges cross exactly 2n - 2 others.
pub fn gen_stacked_prism(m: usize, n: usize) -> ConvexDrawing {
    assert!(m >= 3 && n >= 1);
    let id = |i: usize, j: usize| (i - 1) * n + (j - 1);
    let mut edges = Vec::new();
    for i in 1..=m {
        for j in 1..=n {
            if j < n {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i < m {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    for j in 1..=n {
        edges.push((id(1, j), id(m, j)));
    }
    ConvexDrawing::new(m * n, edges).expect("the prism layout is a valid drawing")
}

/// A set family intended as a bramble certificate.
#[derive(Debug, Clone)]
pub struct Bramble {
    pub sets: Vec<Vec<usize>>,
}

impl Bramble {
    pub fn new(sets: Vec<Vec<usize>>) -> Bramble {
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        Bramble { sets }
    }
}

/// The bramble of G_k of order 3k: every union of an extended row with a Q
/// column, and every union of an R row with an R column.
pub fn gen_gk_bramble(k: usize) -> Bramble {
    assert!(k >= 1);
    let ids = GkIds { k };
    let mut sets = Vec::new();
    // Extended row i: row i of R_k plus row ceil(i / (k+1)) of Q_k.
    for i in 1..=2 * k * (k + 1) {
        let q_row = i.div_ceil(k + 1);
        for j in 1..=2 * k {
            let mut s: Vec<usize> = (1..=k).map(|c| ids.u(i, c)).collect();
            s.extend((1..=2 * k).map(|c| ids.v(q_row, c)));
            s.extend((1..=2 * k).map(|r| ids.v(r, j)));
            sets.push(s);
        }
    }
    for i in 1..=2 * k * (k + 1) {
        for j in 1..=k {
            let mut s: Vec<usize> = (1..=k).map(|c| ids.u(i, c)).collect();
            s.extend((1..=2 * k * (k + 1)).map(|r| ids.u(r, j)));
            sets.push(s);
        }
    }
    Bramble::new(sets)
}

/// Seeded generator of outer min-k-planar drawings: start from the hull
/// cycle, then repeatedly try random chords and keep each one only if the
/// drawing stays outer min-k-planar. Identical (n, k, seed) gives identical
/// output.
pub fn random_outer_min_k_planar(n: usize, k: usize, seed: u64) -> ConvexDrawing {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Edge> = (0..n).map(|i| edge(i, (i + 1) % n)).collect();
    edges.sort_unstable();
    let mut present: std::collections::BTreeSet<Edge> = edges.iter().copied().collect();
    let mut counts: Vec<usize> = vec![0; edges.len()];
    let mut cross_adj: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];

    let span = |e: Edge| -> (usize, usize) { e }; // identity order: position = id
    let interleaves = |e: Edge, f: Edge| -> bool {
        let (a, b) = span(e);
        let (c, d) = span(f);
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    };

    let attempts = 4 * n * (k + 1);
    for _ in 0..attempts {
        let u = (rng.next_u64() % n as u64) as usize;
        let v = (rng.next_u64() % n as u64) as usize;
        if u == v {
            continue;
        }
        let e = edge(u, v);
        if present.contains(&e) {
            continue;
        }
        let crossed: Vec<usize> = (0..edges.len())
            .filter(|&f| interleaves(e, edges[f]))
            .collect();
        let mut in_crossed = vec![false; edges.len()];
        for &f in &crossed {
            in_crossed[f] = true;
        }
        let ce = crossed.len();
        let mut ok = true;
        for &f in &crossed {
            if ce.min(counts[f] + 1) > k {
                ok = false;
                break;
            }
            for &g in &cross_adj[f] {
                let cg = counts[g] + usize::from(in_crossed[g]);
                if (counts[f] + 1).min(cg) > k {
                    ok = false;
                    break;
                }
            }
            if !ok {
                break;
            }
        }
        if !ok {
            continue;
        }
        let idx = edges.len();
        edges.push(e);
        present.insert(e);
        counts.push(ce);
        cross_adj.push(crossed.clone());
        for &f in &crossed {
            counts[f] += 1;
            cross_adj[f].push(idx);
        }
    }

    ConvexDrawing::new(n, edges).expect("generator only adds valid chords")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{bramble_order, exact_treewidth, verify_bramble};

    #[test]
    fn grid_2x2_is_c4() {
        let g = gen_grid(2, 2);
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn gk1_counts_and_treewidth() {
        let g = gen_gk(1);
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 11);
        assert_eq!(exact_treewidth(&g).unwrap(), 2); // 3k - 1 with k = 1
    }

    #[test]
    fn gk1_bramble_certificate() {
        let g = gen_gk(1);
        let b = gen_gk_bramble(1);
        // 2k(k+1) * 2k extended-row/column sets plus rows * columns of R.
        assert_eq!(b.sets.len(), 8 + 4);
        verify_bramble(&g, &b).unwrap();
        assert_eq!(bramble_order(&g, &b).unwrap(), 3);
    }

    #[test]
    fn gk2_bramble_certificate() {
        let g = gen_gk(2);
        let b = gen_gk_bramble(2);
        // 2k(k+1) extended rows times 2k Q-columns, plus R rows times R columns.
        let k = 2;
        assert_eq!(
            b.sets.len(),
            2 * k * (k + 1) * 2 * k + 2 * k * (k + 1) * k
        );
        verify_bramble(&g, &b).unwrap();
        assert_eq!(bramble_order(&g, &b).unwrap(), 6);
    }

    #[test]
    fn fk_vertex_count_closed_form() {
        for k in 1..=4 {
            let layout = FkLayout::new(k);
            let expect = 4 * k * k
                + 2 * k * k * (k + 1)
                + k * (k + 1) * (k - 1)
                + 2 * k
                + 2 * k * (k + 1);
            assert_eq!(layout.n(), expect, "k = {k}");
            assert_eq!(layout.cyclic_order().len(), expect);
        }
    }

    #[test]
    fn fk1_is_outer_1_planar() {
        let d = gen_fk(1);
        assert_eq!(d.n(), 14);
        assert!(d.is_outer_k_planar(1));
    }

    #[test]
    fn fk1_golden_output() {
        // Hand-checked: ids are Q block (v11 v12 v21 v22), R block (u11..u41),
        // Z block (z10 z20), W block (w11 w12 w21 w22); the order line is the
        // prescribed cyclic order of the drawing starting at v11.
        let d = gen_fk(1);
        assert_eq!(
            crate::io::write_cvx(&d),
            "p cvx 14 17\n\
             o 1 2 9 12 11 5 6 7 8 14 13 10 4 3\n\
             e 1 2\ne 1 3\ne 2 4\ne 2 9\ne 3 4\ne 4 10\ne 5 6\ne 5 11\ne 6 7\n\
             e 6 12\ne 7 8\ne 7 13\ne 8 14\ne 9 12\ne 10 13\ne 11 12\ne 13 14\n"
        );
    }

    #[test]
    fn fk2_is_outer_3_planar() {
        let d = gen_fk(2);
        assert!(d.is_outer_k_planar(3));
    }

    #[test]
    fn fk3_is_outer_5_planar() {
        let d = gen_fk(3);
        assert!(d.is_outer_k_planar(5));
    }

    #[test]
    fn fk_per_type_caps_hold() {
        for k in 1..=4 {
            let layout = FkLayout::new(k);
            let d = layout.drawing();
            let r = d.crossings();
            for (i, &e) in d.edges().iter().enumerate() {
                let t = layout.classify(e);
                assert!(
                    r.per_edge[i] <= layout.type_cap(t),
                    "k={k} edge {e:?} of type {t:?} crosses {} > cap {}",
                    r.per_edge[i],
                    layout.type_cap(t)
                );
            }
        }
    }

    #[test]
    fn fk_contracts_to_gk() {
        for k in 1..=2 {
            let layout = FkLayout::new(k);
            let d = layout.drawing();
            let (classes, num) = layout.contraction_classes();
            let contracted = d.graph().contract_classes(&classes, num);
            assert_eq!(contracted, gen_gk(k), "contraction of F_{k} must equal G_{k}");
        }
    }

    #[test]
    fn prism_y_m1_is_cycle() {
        let d = gen_stacked_prism(6, 1);
        assert_eq!(d.n(), 6);
        assert_eq!(d.m(), 6);
        assert_eq!(d.crossings().k_value, 0);
    }

    #[test]
    fn prism_y63_column_edges_cross_four() {
        let d = gen_stacked_prism(6, 3);
        let r = d.crossings();
        for (i, &e) in d.edges().iter().enumerate() {
            // Row edges join consecutive ids within a row.
            let same_row = e.0 / 3 == e.1 / 3;
            if same_row {
                assert_eq!(r.per_edge[i], 0, "row edge {e:?}");
            } else {
                assert_eq!(r.per_edge[i], 4, "column edge {e:?}");
            }
        }
        assert!(d.is_outer_min_k_planar(4));
        assert!(!d.is_outer_min_k_planar(3));
    }

    #[test]
    fn prism_y42_min_k_value() {
        let d = gen_stacked_prism(4, 2);
        assert_eq!(d.crossings().min_k_value, 2);
        assert!(d.is_outer_min_k_planar(2));
    }

    #[test]
    fn random_generator_is_deterministic() {
        let a = random_outer_min_k_planar(12, 2, 7);
        let b = random_outer_min_k_planar(12, 2, 7);
        assert_eq!(a.edges(), b.edges());
        assert!(a.is_outer_min_k_planar(2));
    }

    #[test]
    fn random_generator_with_k0_is_crossing_free() {
        for seed in 0..5 {
            let d = random_outer_min_k_planar(10, 0, seed);
            assert_eq!(d.crossings().min_k_value, 0);
            assert_eq!(d.crossings().pairs.len(), 0);
        }
    }

    #[test]
    fn fk1_treewidth_at_least_2() {
        let d = gen_fk(1);
        assert!(exact_treewidth(&d.graph()).unwrap() >= 2);
    }
}
