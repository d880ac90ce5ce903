use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{chromatic_number, clique_number, SimpleGraph};
use crate::bitset::BitSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Cycle(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Every exact invariant the claim checkers consult.
///
/// The empty graph is reported as connected with diameter 0 and no cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInvariants {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub connected: bool,
    pub diameter: Diameter,
    pub girth: Girth,
    pub cut_vertices: BitSet,
    pub bridges: Vec<(usize, usize)>,
    pub core_vertices: BitSet,
    pub core_edges: Vec<(usize, usize)>,
    pub clique_number: usize,
    pub chromatic_number: usize,
    pub degrees: Vec<usize>,
}

impl GraphInvariants {
    pub fn of(g: &SimpleGraph) -> GraphInvariants {
        let (cut_vertices, bridges) = cut_vertices_and_bridges(g);
        let core_edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|e| !bridges.contains(e)).collect();
        let core_vertices = core_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        let diameter = diameter(g);
        GraphInvariants {
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            connected: diameter != Diameter::Infinite,
            diameter,
            girth: girth(g),
            cut_vertices,
            bridges,
            core_vertices,
            core_edges,
            clique_number: clique_number(g),
            chromatic_number: chromatic_number(g),
            degrees: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
        }
    }

    pub fn has_cycle(&self) -> bool {
        self.girth != Girth::Acyclic
    }
}

/// Hop distances from `src`; `None` for unreachable vertices.
pub fn bfs_distances(g: &SimpleGraph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

pub fn diameter(g: &SimpleGraph) -> Diameter {
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in bfs_distances(g, s) {
            match d {
                Some(d) => best = best.max(d),
                None => return Diameter::Infinite,
            }
        }
    }
    Diameter::Finite(best)
}

/// Shortest cycle length, by a BFS from every vertex.
pub fn girth(g: &SimpleGraph) -> Girth {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    }
}

/// Articulation points and bridges by the low-link DFS.
pub fn cut_vertices_and_bridges(g: &SimpleGraph) -> (BitSet, Vec<(usize, usize)>) {
    struct State {
        timer: usize,
        tin: Vec<usize>,
        low: Vec<usize>,
        cut: BitSet,
        bridges: Vec<(usize, usize)>,
    }

    fn dfs(g: &SimpleGraph, st: &mut State, v: usize, parent: Option<usize>) {
        st.timer += 1;
        st.tin[v] = st.timer;
        st.low[v] = st.timer;
        let mut children = 0;
        for to in g.neighbors(v) {
            if Some(to) == parent {
                continue;
            }
            if st.tin[to] != 0 {
                st.low[v] = st.low[v].min(st.tin[to]);
            } else {
                dfs(g, st, to, Some(v));
                st.low[v] = st.low[v].min(st.low[to]);
                if st.low[to] > st.tin[v] {
                    st.bridges.push((v.min(to), v.max(to)));
                }
                if st.low[to] >= st.tin[v] && parent.is_some() {
                    st.cut.insert(v);
                }
                children += 1;
            }
        }
        if parent.is_none() && children > 1 {
            st.cut.insert(v);
        }
    }

    let n = g.vertex_count();
    let mut st = State {
        timer: 0,
        tin: vec![0; n],
        low: vec![0; n],
        cut: BitSet::empty(),
        bridges: Vec::new(),
    };
    for v in 0..n {
        if st.tin[v] == 0 {
            dfs(g, &mut st, v, None);
        }
    }
    st.bridges.sort_unstable();
    (st.cut, st.bridges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn four_cycle() {
        let inv = GraphInvariants::of(&cycle(4));
        assert_eq!(inv.diameter, Diameter::Finite(2));
        assert_eq!(inv.girth, Girth::Cycle(4));
        assert!(inv.cut_vertices.is_empty());
        assert!(inv.bridges.is_empty());
        assert_eq!(inv.core_vertices, BitSet::full(4));
        assert_eq!((inv.clique_number, inv.chromatic_number), (2, 2));
    }

    #[test]
    fn wheel_four() {
        let inv = GraphInvariants::of(&wheel(4));
        assert_eq!(inv.girth, Girth::Cycle(3));
        assert_eq!(inv.diameter, Diameter::Finite(2));
        assert_eq!((inv.clique_number, inv.chromatic_number), (3, 3));
    }

    #[test]
    fn single_edge() {
        let inv = GraphInvariants::of(&path(2));
        assert_eq!(inv.diameter, Diameter::Finite(1));
        assert_eq!(inv.girth, Girth::Acyclic);
        assert_eq!(inv.degrees, vec![1, 1]);
        assert!(inv.core_vertices.is_empty() && inv.core_edges.is_empty());
        assert_eq!(inv.bridges, vec![(0, 1)]);
    }

    #[test]
    fn empty_and_disconnected() {
        let inv = GraphInvariants::of(&SimpleGraph::new(0));
        assert!(inv.connected);
        assert_eq!(inv.diameter, Diameter::Finite(0));
        assert_eq!(inv.girth, Girth::Acyclic);
        assert_eq!((inv.clique_number, inv.chromatic_number), (0, 0));

        let inv = GraphInvariants::of(&SimpleGraph::new(2));
        assert!(!inv.connected);
        assert_eq!(inv.diameter, Diameter::Infinite);
        assert_eq!((inv.clique_number, inv.chromatic_number), (1, 1));
    }

    #[test]
    fn bowtie_cut_vertex() {
        // two triangles sharing vertex 2, plus a pendant on 0
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (0, 5)]);
        let inv = GraphInvariants::of(&g);
        assert_eq!(inv.cut_vertices.to_vec(), vec![0, 2]);
        assert_eq!(inv.bridges, vec![(0, 5)]);
        assert_eq!(inv.core_vertices.to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(inv.girth, Girth::Cycle(3));
        assert_eq!(inv.diameter, Diameter::Finite(3));
    }

    #[test]
    fn long_cycle_girth() {
        assert_eq!(girth(&cycle(7)), Girth::Cycle(7));
        assert_eq!(girth(&path(7)), Girth::Acyclic);
    }
}
