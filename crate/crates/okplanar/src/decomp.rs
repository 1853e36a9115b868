//! The width-bound construction: a primal spanning tree of the subdivided
//! crossing graph containing all auxiliary edges, the dual spanning tree
//! rooted at the outer face with bounded depth, the four bag rules, and the
//! contraction back to the original graph.

use crate::drawing::{ConvexDrawing, ExpansionResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::planarize::{planarize, Planarization};
use std::collections::{BTreeSet, VecDeque};

/// Primal spanning tree of G_S paired with the rooted dual spanning tree.
#[derive(Debug, Clone)]
pub struct SpanningTreePair {
    /// G_S edge indices forming the primal tree T_S, sorted.
    pub primal_edges: Vec<usize>,
    /// Per face of G_S: parent face in the dual tree and the G_S edge the
    /// connecting dual edge crosses. `None` exactly at the root.
    pub dual_parent: Vec<Option<(usize, usize)>>,
    /// Tree distance to the root face.
    pub dual_depth: Vec<usize>,
    /// The outer face of G_S.
    pub root: usize,
}

impl SpanningTreePair {
    pub fn max_depth(&self) -> usize {
        self.dual_depth.iter().copied().max().unwrap_or(0)
    }
}

/// Orientation of the edges of a hull-complete drawing with max degree 3:
/// hull edges run clockwise (position p to p+1), chords from the smaller to
/// the larger cyclic position.
#[derive(Debug, Clone)]
pub struct EdgeOrientation {
    /// `(tail, head)` per drawing edge, parallel to the drawing's edge list.
    pub dir: Vec<(usize, usize)>,
}

/// Tree of bags; nodes are indexed 0..bags.len().
#[derive(Debug, Clone)]
pub struct TreeDecomposition {
    pub adj: Vec<Vec<usize>>,
    pub bags: Vec<Vec<usize>>,
}

/// A failed tree-decomposition property, as data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    NotATree(String),
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    OccurrenceDisconnected(usize),
}

impl std::fmt::Display for TdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TdViolation::NotATree(why) => write!(f, "bag graph is not a tree: {why}"),
            TdViolation::VertexUncovered(v) => write!(f, "vertex {v} is in no bag"),
            TdViolation::EdgeUncovered(u, v) => write!(f, "edge ({u}, {v}) is in no bag"),
            TdViolation::OccurrenceDisconnected(v) => {
                write!(f, "bags containing {v} do not induce a subtree")
            }
        }
    }
}

impl TreeDecomposition {
    pub fn single_bag(vertices: Vec<usize>) -> TreeDecomposition {
        TreeDecomposition { adj: vec![Vec::new()], bags: vec![vertices] }
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    /// Size of the largest bag minus one.
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// Tree edges with the smaller node first, sorted; the index of an edge
    /// in this list is its id for tie-breaking.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut es = Vec::new();
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    es.push((u, v));
                }
            }
        }
        es.sort_unstable();
        es
    }

    pub fn max_tree_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    /// Checks all defining properties against `g` and returns every violation.
    pub fn validate(&self, g: &Graph) -> Vec<TdViolation> {
        let mut out = Vec::new();
        let nodes = self.num_nodes();
        if nodes == 0 {
            out.push(TdViolation::NotATree("no bags".into()));
            return out;
        }
        let num_edges: usize = self.adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        if num_edges != nodes - 1 {
            out.push(TdViolation::NotATree(format!(
                "{num_edges} edges on {nodes} nodes"
            )));
        } else {
            let mut seen = vec![false; nodes];
            let mut stack = vec![0usize];
            seen[0] = true;
            let mut count = 1;
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            if count != nodes {
                out.push(TdViolation::NotATree("disconnected".into()));
            }
        }

        let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v < g.n() {
                    occurrences[v].push(x);
                }
            }
        }
        for v in 0..g.n() {
            if occurrences[v].is_empty() {
                out.push(TdViolation::VertexUncovered(v));
            }
        }
        for &(u, v) in g.edges() {
            let covered = self
                .bags
                .iter()
                .any(|bag| bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok());
            if !covered {
                out.push(TdViolation::EdgeUncovered(u, v));
            }
        }
        // Occurrence connectivity via BFS inside the occurrence set.
        for v in 0..g.n() {
            let occ = &occurrences[v];
            if occ.is_empty() {
                continue;
            }
            let occ_set: BTreeSet<usize> = occ.iter().copied().collect();
            let mut seen: BTreeSet<usize> = BTreeSet::new();
            let mut stack = vec![occ[0]];
            seen.insert(occ[0]);
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if occ_set.contains(&y) && seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            if seen.len() != occ_set.len() {
                out.push(TdViolation::OccurrenceDisconnected(v));
            }
        }
        out
    }
}

/// Validator as a free function, matching the rest of the pipeline API.
pub fn validate_td(td: &TreeDecomposition, g: &Graph) -> Vec<TdViolation> {
    td.validate(g)
}

/// BFS tree of the dual of G_C rooted at the outer face, lifted to G_S
/// through the edge correspondence and completed with all auxiliary edges;
/// the complement duals then form the rooted dual tree whose depth is
/// certified against `floor(k/2) + 1`.
pub fn build_tree_pair(plan: &Planarization, k: usize) -> Result<SpanningTreePair> {
    let gc = &plan.gc;
    let gs = &plan.gs;

    // BFS on the dual of G_C, neighbors in ascending face id.
    let num_gc_faces = plan.gc_faces.num_faces();
    let mut visited = vec![false; num_gc_faces];
    let mut tree_dual_gc: Vec<bool> = vec![false; gc.num_edges()];
    let mut queue = VecDeque::new();
    visited[plan.gc_faces.outer_face] = true;
    queue.push_back(plan.gc_faces.outer_face);
    while let Some(f) = queue.pop_front() {
        for &(g, via) in &plan.gc_faces.dual_adj[f] {
            if !visited[g] {
                visited[g] = true;
                tree_dual_gc[via] = true;
                queue.push_back(g);
            }
        }
    }
    if visited.iter().any(|&v| !v) {
        return Err(Error::Internal("dual of G_C is disconnected".into()));
    }

    // Primal tree of G_S: complement duals of G_C mapped up, plus all
    // auxiliary edges.
    let mut in_tree = vec![false; gs.num_edges()];
    for (e, &used) in tree_dual_gc.iter().enumerate() {
        if !used {
            in_tree[gs.gs_edge_of_gc[e]] = true;
        }
    }
    for &a in &gs.aux_edges {
        in_tree[a] = true;
    }
    let primal_edges: Vec<usize> = (0..gs.num_edges()).filter(|&e| in_tree[e]).collect();

    // Spanning-tree check (count plus acyclicity via union-find).
    if primal_edges.len() != gs.num_vertices() - 1 {
        return Err(Error::Internal(format!(
            "primal tree has {} edges on {} vertices",
            primal_edges.len(),
            gs.num_vertices()
        )));
    }
    let mut parent: Vec<usize> = (0..gs.num_vertices()).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &e in &primal_edges {
        let (u, v) = gs.edges[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return Err(Error::Internal("primal tree contains a cycle".into()));
        }
        parent[ru] = rv;
    }

    // Rooted dual tree of G_S from the complement.
    let num_gs_faces = plan.gs_faces.num_faces();
    let mut dual_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); num_gs_faces];
    for e in 0..gs.num_edges() {
        if !in_tree[e] {
            let (f1, f2) = plan.gs_faces.dual_of[e];
            dual_adj[f1].push((f2, e));
            dual_adj[f2].push((f1, e));
        }
    }
    for a in &mut dual_adj {
        a.sort_unstable();
    }
    let root = plan.gs_faces.outer_face;
    let mut dual_parent = vec![None; num_gs_faces];
    let mut dual_depth = vec![usize::MAX; num_gs_faces];
    let mut queue = VecDeque::new();
    dual_depth[root] = 0;
    queue.push_back(root);
    while let Some(f) = queue.pop_front() {
        for &(g, via) in &dual_adj[f] {
            if dual_depth[g] == usize::MAX {
                dual_depth[g] = dual_depth[f] + 1;
                dual_parent[g] = Some((f, via));
                queue.push_back(g);
            }
        }
    }
    if dual_depth.iter().any(|&d| d == usize::MAX) {
        return Err(Error::Internal("dual tree of G_S is disconnected".into()));
    }

    let bound = k / 2 + 1;
    for (f, &d) in dual_depth.iter().enumerate() {
        if d > bound {
            return Err(Error::DepthBoundViolated { face: f, depth: d, bound });
        }
    }

    Ok(SpanningTreePair { primal_edges, dual_parent, dual_depth, root })
}

/// Orients hull edges clockwise and chords from the smaller to the larger
/// cyclic position. Every vertex ends up with at most two incoming and at
/// least one outgoing edge.
pub fn orient_edges(d: &ConvexDrawing) -> Result<EdgeOrientation> {
    if !d.is_hull_complete() {
        return Err(Error::PreconditionViolated(
            "orientation needs a hull-complete drawing".into(),
        ));
    }
    if d.max_degree() > 3 {
        return Err(Error::PreconditionViolated(
            "orientation needs max degree 3; expand first".into(),
        ));
    }
    let dir: Vec<(usize, usize)> = d
        .edges()
        .iter()
        .map(|&(u, v)| {
            if d.is_hull_edge((u, v)) {
                if d.hull_successor(u) == v {
                    (u, v)
                } else {
                    (v, u)
                }
            } else if d.position(u) < d.position(v) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    let mut incoming = vec![0usize; d.n()];
    let mut outgoing = vec![0usize; d.n()];
    for &(t, h) in &dir {
        outgoing[t] += 1;
        incoming[h] += 1;
    }
    for v in 0..d.n() {
        if incoming[v] > 2 {
            return Err(Error::Internal(format!("vertex {v} has {} incoming edges", incoming[v])));
        }
        if outgoing[v] == 0 {
            return Err(Error::Internal(format!("vertex {v} has no outgoing edge")));
        }
    }
    Ok(EdgeOrientation { dir })
}

/// Applies the four bag rules to produce a tree decomposition of the
/// (expanded) drawing's graph on the tree T_S.
pub fn build_bags(
    plan: &Planarization,
    pair: &SpanningTreePair,
    orient: &EdgeOrientation,
    k: usize,
) -> Result<TreeDecomposition> {
    let gs = &plan.gs;
    let n = gs.n_outer;
    let num_nodes = gs.num_vertices();
    let mut bags: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); num_nodes];

    // Rule 1: every outer vertex sits in its own bag.
    for v in 0..n {
        bags[v].insert(v);
    }
    // Rule 2: the tail of every oriented edge joins the head's bag.
    for &(tail, head) in &orient.dir {
        bags[head].insert(tail);
    }
    // Rule 3: each half of a crossing picks up the tails of both edges
    // through it.
    for (c, &(v1, v2)) in gs.split.iter().enumerate() {
        let (ei, ej) = gs.lies_on[c];
        for h in [v1, v2] {
            bags[h].insert(orient.dir[ei].0);
            bags[h].insert(orient.dir[ej].0);
        }
    }
    // Rule 4: for every vertex and every adjacent non-outer face, the tails
    // collected along the face's root path in the dual tree. Paths are
    // memoized per face; BFS order guarantees parents are filled first.
    let num_faces = plan.gs_faces.num_faces();
    let mut tails: Vec<Vec<usize>> = vec![Vec::new(); num_faces];
    let mut order: Vec<usize> = (0..num_faces).collect();
    order.sort_by_key(|&f| pair.dual_depth[f]);
    for &f in &order {
        if let Some((p, via)) = pair.dual_parent[f] {
            let orig = gs.seg_lies_on[via]
                .ok_or_else(|| Error::Internal("dual tree crosses an auxiliary edge".into()))?;
            let mut t = tails[p].clone();
            t.push(orient.dir[orig].0);
            tails[f] = t;
        }
    }
    let mut faces_at: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); num_nodes];
    for (f, walk) in plan.gs_faces.faces.iter().enumerate() {
        if f == pair.root {
            continue;
        }
        for &(u, _) in walk {
            faces_at[u].insert(f);
        }
    }
    for v in 0..num_nodes {
        for &f in &faces_at[v] {
            for &t in &tails[f] {
                bags[v].insert(t);
            }
        }
    }

    // Proof caps: inner bags hold at most 2 + 3(k/2 + 1) vertices, outer bags
    // at most 3 + 2(k/2 + 1).
    let path = k / 2 + 1;
    for (x, bag) in bags.iter().enumerate() {
        let cap = if x < n { 3 + 2 * path } else { 2 + 3 * path };
        if bag.len() > cap {
            return Err(Error::BoundViolated {
                what: if x < n { "outer bag size" } else { "inner bag size" },
                got: bag.len(),
                bound: cap,
            });
        }
    }

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); num_nodes];
    for &e in &pair.primal_edges {
        let (u, v) = gs.edges[e];
        adj[u].push(v);
        adj[v].push(u);
    }
    for a in &mut adj {
        a.sort_unstable();
    }

    Ok(TreeDecomposition {
        adj,
        bags: bags.into_iter().map(|b| b.into_iter().collect()).collect(),
    })
}

/// Maps every bag through the expansion's origin map, turning a decomposition
/// of the expanded graph into one of the original graph on the same tree.
pub fn contract_bags(td: &TreeDecomposition, origin: &[usize]) -> TreeDecomposition {
    let bags = td
        .bags
        .iter()
        .map(|bag| {
            let set: BTreeSet<usize> = bag.iter().map(|&v| origin[v]).collect();
            set.into_iter().collect()
        })
        .collect();
    TreeDecomposition { adj: td.adj.clone(), bags }
}

/// All intermediate artifacts of one decomposition run.
#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub input: ConvexDrawing,
    pub k: usize,
    pub hulled: ConvexDrawing,
    pub expansion: ExpansionResult,
    pub plan: Planarization,
    pub pair: SpanningTreePair,
    pub orientation: EdgeOrientation,
    /// Decomposition of the expanded graph, indexed by V(G_S) with tree T_S.
    pub expanded_td: TreeDecomposition,
    /// Decomposition of the input graph after contraction.
    pub td: TreeDecomposition,
}

impl PipelineRun {
    /// The proven width cap for this run's k.
    pub fn width_bound(&self) -> usize {
        3 * (self.k / 2) + 4
    }
}

/// Full pipeline: hull completion, expansion, planarization, tree pair, bag
/// rules, contraction. Checks the min-k precondition and every internal
/// invariant; the input must have at least 3 vertices.
pub fn run_pipeline(d: &ConvexDrawing, k: usize) -> Result<PipelineRun> {
    if d.n() < 3 {
        return Err(Error::TrivialInstance);
    }
    let report = d.crossings();
    if report.min_k_value > k {
        let &(i, j) = report
            .pairs
            .iter()
            .find(|&&(i, j)| report.per_edge[i].min(report.per_edge[j]) > k)
            .expect("a witness pair exists when the min-k check fails");
        return Err(Error::NotMinKPlanar {
            k,
            e: d.edges()[i],
            f: d.edges()[j],
            ce: report.per_edge[i],
            cf: report.per_edge[j],
        });
    }

    let hulled = d.hull_complete()?;
    let expansion = hulled.expand()?;
    let plan = planarize(&expansion.expanded)?;
    let pair = build_tree_pair(&plan, k)?;
    let orientation = orient_edges(&expansion.expanded)?;
    let expanded_td = build_bags(&plan, &pair, &orientation, k)?;

    let expanded_graph = expansion.expanded.graph();
    let violations = expanded_td.validate(&expanded_graph);
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "expanded decomposition invalid: {}",
            violations[0]
        )));
    }

    let td = contract_bags(&expanded_td, &expansion.origin);
    let violations = td.validate(&d.graph());
    if !violations.is_empty() {
        return Err(Error::Internal(format!(
            "contracted decomposition invalid: {}",
            violations[0]
        )));
    }
    let bound = 3 * (k / 2) + 4;
    if td.width() > bound {
        return Err(Error::BoundViolated { what: "width", got: td.width(), bound });
    }

    Ok(PipelineRun {
        input: d.clone(),
        k,
        hulled,
        expansion,
        plan,
        pair,
        orientation,
        expanded_td,
        td,
    })
}

/// Tree decomposition of the drawing's graph with width at most
/// `3 * floor(k/2) + 4`. Drawings on fewer than 3 vertices get one bag.
pub fn decompose(d: &ConvexDrawing, k: usize) -> Result<TreeDecomposition> {
    if d.n() <= 2 {
        return Ok(TreeDecomposition::single_bag((0..d.n()).collect()));
    }
    run_pipeline(d, k).map(|run| run.td)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;

    fn complete(n: usize) -> ConvexDrawing {
        let mut es = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                es.push((u, v));
            }
        }
        ConvexDrawing::new(n, es).unwrap()
    }

    fn cycle(n: usize) -> ConvexDrawing {
        ConvexDrawing::new(n, (0..n).map(|i| edge(i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn tree_pair_on_c6() {
        let d = cycle(6);
        let plan = planarize(&d).unwrap();
        let pair = build_tree_pair(&plan, 0).unwrap();
        assert_eq!(plan.gs_faces.num_faces(), 2);
        assert_eq!(pair.primal_edges.len(), 5);
        assert_eq!(pair.max_depth(), 1);
    }

    #[test]
    fn tree_pair_on_k4() {
        let d = complete(4);
        let plan = planarize(&d).unwrap();
        let pair = build_tree_pair(&plan, 1).unwrap();
        // All four inner faces at depth 1 = floor(1/2) + 1.
        for (f, &depth) in pair.dual_depth.iter().enumerate() {
            if f != pair.root {
                assert_eq!(depth, 1);
            }
        }
        // The auxiliary edge belongs to the primal tree.
        let aux = plan.gs.aux_edges[0];
        assert!(pair.primal_edges.contains(&aux));
    }

    #[test]
    fn orient_cycle_one_in_one_out() {
        let d = cycle(5);
        let orient = orient_edges(&d).unwrap();
        let mut incoming = vec![0usize; 5];
        let mut outgoing = vec![0usize; 5];
        for &(t, h) in &orient.dir {
            outgoing[t] += 1;
            incoming[h] += 1;
        }
        assert!(incoming.iter().all(|&c| c == 1));
        assert!(outgoing.iter().all(|&c| c == 1));
    }

    #[test]
    fn orient_k4_at_most_two_incoming() {
        let d = complete(4);
        let orient = orient_edges(&d).unwrap();
        let mut incoming = vec![0usize; 4];
        for &(_, h) in &orient.dir {
            incoming[h] += 1;
        }
        assert!(incoming.iter().all(|&c| c <= 2));
    }

    #[test]
    fn orient_expanded_k5_has_outgoing_hull() {
        let ex = complete(5).expand().unwrap();
        let orient = orient_edges(&ex.expanded).unwrap();
        let mut outgoing = vec![0usize; ex.expanded.n()];
        for &(t, _) in &orient.dir {
            outgoing[t] += 1;
        }
        assert!(outgoing.iter().all(|&c| c >= 1));
    }

    #[test]
    fn decompose_c6_is_tight() {
        let d = cycle(6);
        let td = decompose(&d, 0).unwrap();
        assert!(td.validate(&d.graph()).is_empty());
        assert!(td.width() <= 4);
        assert!(td.width() <= 2, "crossing-free case should reach width 2, got {}", td.width());
    }

    #[test]
    fn decompose_k4() {
        let d = complete(4);
        let td = decompose(&d, 1).unwrap();
        assert!(td.validate(&d.graph()).is_empty());
        assert!(td.width() <= 4);
        assert!(td.width() >= 3); // tw(K4) = 3
    }

    #[test]
    fn decompose_k5_via_expansion() {
        let d = complete(5);
        let td = decompose(&d, 2).unwrap();
        assert!(td.validate(&d.graph()).is_empty());
        assert!(td.width() >= 4); // tw(K5) = 4
        assert!(td.width() <= 7); // 3 * 1 + 4
        // Every original vertex occurs in at least two bags.
        for v in 0..5 {
            let occ = td.bags.iter().filter(|b| b.binary_search(&v).is_ok()).count();
            assert!(occ >= 2, "vertex {v} occurs in {occ} bags");
        }
        // Tree degree stays at most 3 (G_S has max degree 3 after splitting).
        assert!(td.max_tree_degree() <= 3);
    }

    #[test]
    fn decompose_rejects_non_min_k() {
        let d = complete(4);
        match decompose(&d, 0) {
            Err(Error::NotMinKPlanar { e, f, .. }) => {
                assert_eq!(e, (0, 2));
                assert_eq!(f, (1, 3));
            }
            other => panic!("expected NotMinKPlanar, got {other:?}"),
        }
    }

    #[test]
    fn decompose_trivial_instances() {
        let d = ConvexDrawing::new(2, vec![(0, 1)]).unwrap();
        let td = decompose(&d, 0).unwrap();
        assert_eq!(td.num_nodes(), 1);
        assert_eq!(td.bags[0], vec![0, 1]);
    }

    #[test]
    fn contract_identity_when_no_expansion() {
        let d = complete(4);
        let run = run_pipeline(&d, 1).unwrap();
        assert_eq!(run.expanded_td.bags, run.td.bags);
    }

    #[test]
    fn rules_one_and_two_cover_oriented_edges() {
        let d = complete(5);
        let run = run_pipeline(&d, 2).unwrap();
        for &(t, h) in &run.orientation.dir {
            let bag = &run.expanded_td.bags[h];
            assert!(bag.binary_search(&t).is_ok());
            assert!(bag.binary_search(&h).is_ok());
        }
    }

    #[test]
    fn duality_partition_counts() {
        let d = complete(5);
        let run = run_pipeline(&d, 2).unwrap();
        let gs = &run.plan.gs;
        assert_eq!(run.pair.primal_edges.len(), gs.num_vertices() - 1);
        assert_eq!(
            gs.num_edges() - run.pair.primal_edges.len(),
            run.plan.gs_faces.num_faces() - 1
        );
    }

    #[test]
    fn validator_reports_real_violations() {
        // Triangle with bags {0,1} and {2}: edges (1,2) and (0,2) uncovered.
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]);
        let td = TreeDecomposition {
            adj: vec![vec![1], vec![0]],
            bags: vec![vec![0, 1], vec![2]],
        };
        let violations = td.validate(&g);
        assert!(violations.contains(&TdViolation::EdgeUncovered(1, 2)));
        assert!(violations.contains(&TdViolation::EdgeUncovered(0, 2)));
        assert_eq!(violations.len(), 2);
    }

    #[test]
    fn validator_accepts_single_bag() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]);
        let td = TreeDecomposition::single_bag(vec![0, 1, 2, 3]);
        assert!(td.validate(&g).is_empty());
        assert_eq!(td.width(), 3);
    }

    #[test]
    fn validator_catches_disconnected_occurrence() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]);
        let td = TreeDecomposition {
            adj: vec![vec![1], vec![0, 2], vec![1]],
            bags: vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        };
        let violations = td.validate(&g);
        assert!(violations.contains(&TdViolation::OccurrenceDisconnected(0)));
    }

    #[test]
    fn depth_guard_fires_on_unexpanded_input() {
        // A triangulated hexagon has a central face at dual distance 2, but
        // its corner vertices have degree 4; without expansion the depth
        // bound for k = 0 cannot hold and the guard must fire.
        let mut edges: Vec<_> = (0..6).map(|i| edge(i, (i + 1) % 6)).collect();
        edges.extend([(0, 2), (2, 4), (0, 4)]);
        let d = ConvexDrawing::new(6, edges).unwrap();
        assert!(d.is_outer_min_k_planar(0));
        let plan = planarize(&d).unwrap();
        assert!(matches!(
            build_tree_pair(&plan, 0),
            Err(Error::DepthBoundViolated { depth: 2, bound: 1, .. })
        ));
    }

    #[test]
    fn decompose_k4_golden_output() {
        // Hand-run of the four bag rules on K4: the bags at the four outer
        // vertices, the two halves of the single crossing, and the primal
        // tree joining them. Pins the deterministic output choices.
        let d = complete(4);
        let td = decompose(&d, 1).unwrap();
        assert_eq!(
            crate::io::write_td(&td, 4),
            "s td 6 4 4\n\
             b 1 1 4\n\
             b 2 1 2\n\
             b 3 1 2 3\n\
             b 4 2 3 4\n\
             b 5 1 2 4\n\
             b 6 1 2 3 4\n\
             1 5\n2 5\n3 6\n4 6\n5 6\n"
        );
    }

    #[test]
    fn decompose_f2_width_sits_between_the_bounds() {
        // tw(F_2) >= 5 because G_2 (treewidth 5) is a minor, so any
        // decomposition must have width at least 5; the pipeline promises at
        // most 3 * floor(3/2) + 4 = 7.
        let d = crate::families::gen_fk(2);
        let td = decompose(&d, 3).unwrap();
        assert!(td.validate(&d.graph()).is_empty());
        assert!(td.width() >= 5, "width {}", td.width());
        assert!(td.width() <= 7, "width {}", td.width());
    }

    #[test]
    fn decompose_edgeless_and_disconnected() {
        // Hull completion connects everything; the contracted decomposition
        // is still checked against the original (possibly disconnected) graph.
        let edgeless = ConvexDrawing::new(5, Vec::new()).unwrap();
        let td = decompose(&edgeless, 0).unwrap();
        assert!(td.validate(&edgeless.graph()).is_empty());
        assert!(td.width() <= 4);

        let two_paths = ConvexDrawing::new(7, vec![(0, 1), (1, 2), (4, 5)]).unwrap();
        let td = decompose(&two_paths, 0).unwrap();
        assert!(td.validate(&two_paths.graph()).is_empty());
        assert!(td.width() <= 4);
    }

    #[test]
    fn pipeline_on_random_instances_stays_valid() {
        for seed in 0..50 {
            let n = 6 + (seed as usize % 11);
            let k = seed as usize % 4;
            let d = crate::families::random_outer_min_k_planar(n, k, seed);
            let run = run_pipeline(&d, k).unwrap();
            assert!(run.td.validate(&d.graph()).is_empty());
            assert!(run.td.width() <= run.width_bound());
            assert!(run.pair.max_depth() <= k / 2 + 1);
        }
    }
}
