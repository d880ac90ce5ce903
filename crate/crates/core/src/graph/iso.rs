//! Exact graph isomorphism by backtracking with degree pruning.

use super::SimpleGraph;
use crate::bitset::BitSet;

/// Returns `map` with `map[u]` the image in `h` of vertex `u` of `g`, or
/// `None` if the graphs are not isomorphic.
pub fn graphs_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let sig = |x: &SimpleGraph, v: usize| {
        let mut nd: Vec<usize> = x.neighbors(v).iter().map(|u| x.degree(u)).collect();
        nd.sort_unstable();
        (x.degree(v), nd)
    };
    let sg: Vec<_> = (0..n).map(|v| sig(g, v)).collect();
    let sh: Vec<_> = (0..n).map(|v| sig(h, v)).collect();
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort();
    b.sort();
    if a != b {
        return None;
    }
    // Highest degree first, then keep neighbors of mapped vertices early.
    let mut order = Vec::with_capacity(n);
    let mut placed = BitSet::empty();
    while order.len() < n {
        let frontier: BitSet = order.iter().fold(BitSet::empty(), |acc, &u| acc.union(g.neighbors(u)));
        let pool = frontier.difference(placed);
        let pool = if pool.is_empty() { g.vertices().difference(placed) } else { pool };
        let v = pool.iter().max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        order.push(v);
        placed.insert(v);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = BitSet::empty();
    extend(g, h, &sg, &sh, &order, 0, &mut map, &mut used).then_some(map)
}

#[allow(clippy::too_many_arguments, clippy::type_complexity)]
fn extend(
    g: &SimpleGraph,
    h: &SimpleGraph,
    sg: &[(usize, Vec<usize>)],
    sh: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut BitSet,
) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for w in 0..h.vertex_count() {
        if used.contains(w) || sg[u] != sh[w] {
            continue;
        }
        if order[..depth].iter().any(|&x| g.has_edge(u, x) != h.has_edge(w, map[x])) {
            continue;
        }
        map[u] = w;
        used.insert(w);
        if extend(g, h, sg, sh, order, depth + 1, map, used) {
            return true;
        }
        used.remove(w);
        map[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn check(g: &SimpleGraph, h: &SimpleGraph, m: &[usize]) {
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                assert_eq!(g.has_edge(u, v), h.has_edge(m[u], m[v]));
            }
        }
    }

    #[test]
    fn self_map_is_identity() {
        let g = wheel(4);
        let m = graphs_isomorphic(&g, &g).unwrap();
        check(&g, &g, &m);
        assert_eq!(graphs_isomorphic(&path(1), &path(1)), Some(vec![0]));
        assert_eq!(graphs_isomorphic(&SimpleGraph::new(0), &SimpleGraph::new(0)), Some(vec![]));
    }

    #[test]
    fn relabeled_cycle() {
        let g = cycle(6);
        let h = SimpleGraph::from_edges(6, &[(0, 3), (3, 1), (1, 5), (5, 2), (2, 4), (4, 0)]);
        let m = graphs_isomorphic(&g, &h).unwrap();
        check(&g, &h, &m);
    }

    #[test]
    fn same_degrees_not_isomorphic() {
        // C6 versus two triangles: both 2-regular on 6 vertices.
        let two_triangles = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        assert!(graphs_isomorphic(&cycle(6), &two_triangles).is_none());
        assert!(graphs_isomorphic(&wheel(4), &cycle(4)).is_none());
    }
}
