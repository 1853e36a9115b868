//! Plain undirected simple graphs, used by generators, oracles and validators.

use crate::error::Edge;

/// Normalize an unordered pair so the smaller id comes first.
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list. Self-loops are
    /// dropped, duplicates merged, the edge list is kept sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Graph {
        let mut es: Vec<Edge> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| edge(u, v))
            .collect();
        es.sort_unstable();
        es.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &es {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { n, edges: es, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }

    /// Connectivity over the whole vertex set; the empty graph is connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// True iff the set `vs` induces a connected non-empty subgraph.
    pub fn induces_connected(&self, vs: &[usize]) -> bool {
        if vs.is_empty() {
            return false;
        }
        let mut in_set = vec![false; self.n];
        for &v in vs {
            in_set[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![vs[0]];
        seen[vs[0]] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if in_set[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == vs.iter().filter(|&&v| in_set[v]).count()
    }

    /// Contracts vertices sharing a class id into one vertex per class.
    /// `class[v]` must be a value in `0..num_classes`. Resulting self-loops
    /// are dropped and parallel edges merged.
    pub fn contract_classes(&self, class: &[usize], num_classes: usize) -> Graph {
        assert_eq!(class.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (class[u], class[v]))
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| edge(a, b));
        Graph::new(num_classes, edges)
    }

    /// Connected components of the graph with the vertices in `removed` deleted.
    /// Returns the list of component sizes.
    pub fn component_sizes_without(&self, removed: &[bool]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut sizes = Vec::new();
        for s in 0..self.n {
            if removed[s] || seen[s] {
                continue;
            }
            let mut stack = vec![s];
            seen[s] = true;
            let mut size = 1;
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !removed[w] && !seen[w] {
                        seen[w] = true;
                        size += 1;
                        stack.push(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }
}
