//! Exact order-isomorphism of finite lattices by backtracking.

use super::Lattice;
use crate::bitset::BitSet;

/// Per-element invariant preserved by any order isomorphism.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub(crate) struct ElementProfile {
    height: usize,
    depth: usize,
    lower_covers: usize,
    upper_covers: usize,
    down: usize,
    up: usize,
}

pub(crate) fn profiles(l: &Lattice) -> Vec<ElementProfile> {
    let heights = heights(l);
    let depths = heights_dual(l);
    (0..l.len())
        .map(|a| ElementProfile {
            height: heights[a],
            depth: depths[a],
            lower_covers: l.lower_covers(a).len(),
            upper_covers: l.upper_covers(a).len(),
            down: l.down[a].len(),
            up: l.up[a].len(),
        })
        .collect()
}

/// Sorted multiset of element profiles; equal for isomorphic lattices.
pub(crate) fn invariant_vector(l: &Lattice) -> Vec<ElementProfile> {
    let mut p = profiles(l);
    p.sort_unstable();
    p
}

pub(crate) fn heights(l: &Lattice) -> Vec<usize> {
    // Process elements by increasing down-set size: every strict lower bound
    // comes first.
    let mut order: Vec<usize> = (0..l.len()).collect();
    order.sort_by_key(|&a| l.down[a].len());
    let mut h = vec![0; l.len()];
    for a in order {
        h[a] = l.lower_covers(a).iter().map(|b| h[b] + 1).max().unwrap_or(0);
    }
    h
}

fn heights_dual(l: &Lattice) -> Vec<usize> {
    let mut order: Vec<usize> = (0..l.len()).collect();
    order.sort_by_key(|&a| l.up[a].len());
    let mut h = vec![0; l.len()];
    for a in order {
        h[a] = l.upper_covers(a).iter().map(|b| h[b] + 1).max().unwrap_or(0);
    }
    h
}

/// Returns `map` with `map[a]` the image in `l2` of element `a` of `l1`, such
/// that `a ≤ b ⇔ map[a] ≤ map[b]`; `None` when the lattices are not isomorphic.
pub fn lattices_isomorphic(l1: &Lattice, l2: &Lattice) -> Option<Vec<usize>> {
    if l1.len() != l2.len() {
        return None;
    }
    let p1 = profiles(l1);
    let p2 = profiles(l2);
    let mut s1 = p1.clone();
    let mut s2 = p2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }
    // Map elements in bottom-up order so comparisons against already-mapped
    // elements prune early.
    let mut order: Vec<usize> = (0..l1.len()).collect();
    order.sort_by_key(|&a| (p1[a].height, a));
    let mut map = vec![usize::MAX; l1.len()];
    let mut used = BitSet::empty();
    if extend(l1, l2, &p1, &p2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    l1: &Lattice,
    l2: &Lattice,
    p1: &[ElementProfile],
    p2: &[ElementProfile],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut BitSet,
) -> bool {
    let Some(&a) = order.get(depth) else {
        return true;
    };
    for b in 0..l2.len() {
        if used.contains(b) || p1[a] != p2[b] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| {
            let y = map[x];
            l1.leq(x, a) == l2.leq(y, b) && l1.leq(a, x) == l2.leq(b, y)
        });
        if !consistent {
            continue;
        }
        map[a] = b;
        used.insert(b);
        if extend(l1, l2, p1, p2, order, depth + 1, map, used) {
            return true;
        }
        used.remove(b);
        map[a] = usize::MAX;
    }
    false
}
