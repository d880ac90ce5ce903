//! Exact chromatic number: clique lower bound, greedy upper bound, and a
//! backtracking k-coloring test for every k in between.

use super::{clique_number, SimpleGraph};

pub fn chromatic_number(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let upper = greedy_coloring(g).into_iter().max().map_or(0, |c| c + 1);
    let lower = clique_number(g);
    (lower..upper).find(|&k| is_k_colorable(g, k)).unwrap_or(upper)
}

/// Greedy coloring in descending-degree order.
pub fn greedy_coloring(g: &SimpleGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; n];
    for v in order {
        let used: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
        color[v] = (0..).find(|c| !used.contains(c)).unwrap();
    }
    color
}

pub fn is_k_colorable(g: &SimpleGraph, k: usize) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    if k == 0 {
        return false;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut color = vec![usize::MAX; n];
    assign(g, k, &order, 0, 0, &mut color)
}

fn assign(g: &SimpleGraph, k: usize, order: &[usize], depth: usize, used_colors: usize, color: &mut [usize]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    // Colors are interchangeable, so a fresh color is only tried once.
    for c in 0..k.min(used_colors + 1) {
        if g.neighbors(v).iter().any(|u| color[u] == c) {
            continue;
        }
        color[v] = c;
        if assign(g, k, order, depth + 1, used_colors.max(c + 1), color) {
            return true;
        }
        color[v] = usize::MAX;
    }
    false
}
