//! Maximum clique by Bron–Kerbosch with pivoting and a size bound.

use super::SimpleGraph;
use crate::bitset::BitSet;

pub fn clique_number(g: &SimpleGraph) -> usize {
    maximum_clique(g).len()
}

/// A maximum clique; the lexicographically first one found in vertex order.
pub fn maximum_clique(g: &SimpleGraph) -> BitSet {
    let mut best = BitSet::empty();
    expand(g, BitSet::empty(), g.vertices(), BitSet::empty(), &mut best);
    best
}

fn expand(g: &SimpleGraph, current: BitSet, mut candidates: BitSet, mut excluded: BitSet, best: &mut BitSet) {
    if candidates.is_empty() {
        if excluded.is_empty() && current.len() > best.len() {
            *best = current;
        }
        return;
    }
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    let pivot = candidates
        .union(excluded)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(candidates).len())
        .expect("non-empty");
    for v in candidates.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        expand(g, current.with(v), candidates.intersection(nv), excluded.intersection(nv), best);
        candidates.remove(v);
        excluded.insert(v);
        if current.len() + candidates.len() <= best.len() {
            return;
        }
    }
}
