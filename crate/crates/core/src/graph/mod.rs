//! Small simple undirected graphs and their exact invariants.
//!
//! Vertices are `0..n` with `n ≤ 64`; each adjacency row is a [`BitSet`].

mod clique;
mod coloring;
mod invariants;
mod iso;

use crate::bitset::BitSet;

pub use clique::{clique_number, maximum_clique};
pub use coloring::{chromatic_number, greedy_coloring, is_k_colorable};
pub use invariants::{
    bfs_distances, cut_vertices_and_bridges, diameter, girth, Diameter, Girth, GraphInvariants,
};
pub use iso::graphs_isomorphic;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SimpleGraph {
    adj: Vec<BitSet>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= BitSet::CAPACITY, "at most 64 vertices");
        SimpleGraph {
            adj: vec![BitSet::empty(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> BitSet {
        BitSet::full(self.adj.len())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> BitSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.adj.len() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Subgraph induced by `keep`, renumbered in ascending order of `keep`.
    pub fn induced(&self, keep: BitSet) -> SimpleGraph {
        let kept = keep.to_vec();
        let mut g = SimpleGraph::new(kept.len());
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn is_symmetric_loopless(&self) -> bool {
        (0..self.adj.len()).all(|u| {
            !self.adj[u].contains(u) && self.adj[u].iter().all(|v| v < self.adj.len() && self.adj[v].contains(u))
        })
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::SimpleGraph;

    pub fn cycle(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `C_{n}` plus a hub adjacent to every rim vertex (hub is vertex `n`).
    pub fn wheel(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::new(n + 1);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
            g.add_edge(i, n);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_structure() {
        let g = fixtures::cycle(4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert!(g.is_symmetric_loopless());
        let h = g.induced([0, 1, 2].into_iter().collect());
        assert_eq!(h, fixtures::path(3));
    }
}
