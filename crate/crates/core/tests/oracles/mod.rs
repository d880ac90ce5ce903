//! Brute-force re-implementations shared by the oracle tests and the
//! acceptance harness. Nothing here calls the algorithms under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use zdlattice::graph::{Diameter, Girth, GraphInvariants, SimpleGraph};
use zdlattice::{BitSet, Lattice};

pub type Edge = (usize, usize);

pub fn norm(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

pub fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every simple cycle as (vertex set, edge set), by extending paths that start
/// at their smallest vertex.
pub fn all_cycles(g: &SimpleGraph) -> Vec<(BTreeSet<usize>, BTreeSet<Edge>)> {
    fn extend(g: &SimpleGraph, path: &mut Vec<usize>, out: &mut Vec<(BTreeSet<usize>, BTreeSet<Edge>)>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for w in g.neighbors(last).iter() {
            if w == start && path.len() >= 3 && path[1] < last {
                let mut edges: BTreeSet<Edge> = path.windows(2).map(|p| norm(p[0], p[1])).collect();
                edges.insert(norm(last, start));
                out.push((path.iter().copied().collect(), edges));
            } else if w > start && !path.contains(&w) {
                path.push(w);
                extend(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.vertex_count() {
        extend(g, &mut vec![s], &mut out);
    }
    out
}

pub fn components(g: &SimpleGraph, alive: BitSet, skip_edge: Option<Edge>) -> usize {
    let mut seen = BitSet::empty();
    let mut count = 0;
    for s in alive.iter() {
        if seen.contains(s) {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen.insert(s);
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u).intersection(alive).iter() {
                if skip_edge == Some(norm(u, w)) || seen.contains(w) {
                    continue;
                }
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    count
}

pub fn brute_clique(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    (0u64..1 << n)
        .map(BitSet::from_bits)
        .filter(|s| s.iter().all(|u| s.without(u).is_subset(g.neighbors(u))))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Minimum block count over all set partitions into independent sets.
pub fn brute_chromatic(g: &SimpleGraph) -> usize {
    fn go(g: &SimpleGraph, v: usize, blocks: &mut Vec<BitSet>, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == g.vertex_count() {
            *best = blocks.len();
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i].intersection(g.neighbors(v)).is_empty() {
                blocks[i].insert(v);
                go(g, v + 1, blocks, best);
                blocks[i].remove(v);
            }
        }
        blocks.push(BitSet::singleton(v));
        go(g, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = g.vertex_count() + 1;
    go(g, 0, &mut Vec::new(), &mut best);
    best.min(g.vertex_count())
}

pub fn brute_diameter(g: &SimpleGraph) -> Diameter {
    let n = g.vertex_count();
    // Floyd–Warshall
    let inf = usize::MAX / 2;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for v in g.neighbors(u).iter() {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    if max >= inf {
        Diameter::Infinite
    } else {
        Diameter::Finite(max)
    }
}

macro_rules! ensure_eq {
    ($a:expr, $b:expr, $what:expr, $g:expr) => {
        if $a != $b {
            return Err(format!("{}: {:?} vs oracle {:?} on edges {:?}", $what, $a, $b, $g.edges()));
        }
    };
}

/// Core, girth, bridges, cut vertices, clique and chromatic numbers, diameter.
pub fn check_graph(g: &SimpleGraph) -> Result<(), String> {
    let inv = GraphInvariants::of(g);
    let n = g.vertex_count();
    let cycles = all_cycles(g);

    let cycle_edges: BTreeSet<Edge> = cycles.iter().flat_map(|(_, e)| e.iter().copied()).collect();
    let cycle_vertices: BitSet = cycles.iter().flat_map(|(v, _)| v.iter().copied()).collect();
    let core_edges: BTreeSet<Edge> = inv.core_edges.iter().map(|&(u, v)| norm(u, v)).collect();
    ensure_eq!(core_edges, cycle_edges, "core edges", g);
    ensure_eq!(inv.core_vertices, cycle_vertices, "core vertices", g);

    let girth = match cycles.iter().map(|(v, _)| v.len()).min() {
        Some(k) => Girth::Cycle(k),
        None => Girth::Acyclic,
    };
    ensure_eq!(inv.girth, girth, "girth", g);

    let all = g.vertices();
    let base = components(g, all, None);
    let bridges: BTreeSet<Edge> = g
        .edges()
        .into_iter()
        .filter(|&e| components(g, all, Some(e)) > base)
        .collect();
    let got: BTreeSet<Edge> = inv.bridges.iter().map(|&(u, v)| norm(u, v)).collect();
    ensure_eq!(got, bridges, "bridges", g);
    let cuts: BitSet = (0..n).filter(|&v| components(g, all.without(v), None) > base).collect();
    ensure_eq!(inv.cut_vertices, cuts, "cut vertices", g);

    ensure_eq!(inv.clique_number, brute_clique(g), "clique number", g);
    ensure_eq!(inv.chromatic_number, brute_chromatic(g), "chromatic number", g);
    if n > 0 {
        ensure_eq!(inv.diameter, brute_diameter(g), "diameter", g);
        ensure_eq!(inv.connected, base == 1, "connected", g);
    }
    Ok(())
}

/// Strict order on interior elements `0..m` as an `m*m` bit matrix.
pub type Relation = u64;

fn bit(m: usize, i: usize, j: usize) -> u64 {
    1 << (i * m + j)
}

pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..m).collect(), &mut Vec::new(), &mut out);
    out
}

fn canonical(m: usize, r: Relation, perms: &[Vec<usize>]) -> Relation {
    perms
        .iter()
        .map(|p| {
            let mut out = 0;
            for i in 0..m {
                for j in 0..m {
                    if r & bit(m, i, j) != 0 {
                        out |= bit(m, p[i], p[j]);
                    }
                }
            }
            out
        })
        .min()
        .unwrap()
}

/// Full order with bottom `m` and top `m + 1` around the interior.
fn leq_full(m: usize, r: Relation, a: usize, b: usize) -> bool {
    a == b || a == m || b == m + 1 || (a < m && b < m && r & bit(m, a, b) != 0)
}

fn is_transitive(m: usize, r: Relation) -> bool {
    (0..m).all(|i| {
        (0..m).all(|j| r & bit(m, i, j) == 0 || (0..m).all(|k| r & bit(m, j, k) == 0 || r & bit(m, i, k) != 0))
    })
}

fn is_lattice(m: usize, r: Relation) -> bool {
    let n = m + 2;
    let leq = |a, b| leq_full(m, r, a, b);
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&x| leq(x, a) && leq(x, b)).collect();
            if !lower.iter().any(|&g| lower.iter().all(|&x| leq(x, g))) {
                return false;
            }
            let upper: Vec<usize> = (0..n).filter(|&x| leq(a, x) && leq(b, x)).collect();
            if !upper.iter().any(|&g| upper.iter().all(|&x| leq(g, x))) {
                return false;
            }
        }
    }
    true
}

/// Canonical forms of every lattice with `n >= 2` elements, trying the three
/// states (incomparable, below, above) for every interior pair.
pub fn lattice_classes(n: usize) -> BTreeSet<Relation> {
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let perms = permutations(m);
    let mut classes = BTreeSet::new();
    for code in 0..3usize.pow(pairs.len() as u32) {
        let mut r = 0;
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => r |= bit(m, i, j),
                2 => r |= bit(m, j, i),
                _ => {}
            }
            c /= 3;
        }
        if is_transitive(m, r) && is_lattice(m, r) {
            classes.insert(canonical(m, r, &perms));
        }
    }
    classes
}

pub fn lattice_form(l: &Lattice, perms: &[Vec<usize>]) -> Relation {
    let interior: Vec<usize> = (0..l.len()).filter(|&x| x != l.bottom() && x != l.top()).collect();
    let m = interior.len();
    let mut r = 0;
    for (i, &a) in interior.iter().enumerate() {
        for (j, &b) in interior.iter().enumerate() {
            if i != j && l.leq(a, b) {
                r |= bit(m, i, j);
            }
        }
    }
    canonical(m, r, perms)
}

/// Compares the generator's output at size `n` with the order-matrix oracle;
/// returns the class count.
pub fn compare_generator(n: usize, generated: &[Lattice]) -> Result<usize, String> {
    if n == 1 {
        return if generated.len() == 1 { Ok(1) } else { Err(format!("{} lattices of size 1", generated.len())) };
    }
    let oracle = lattice_classes(n);
    let perms = permutations(n - 2);
    let forms: Vec<Relation> = generated.iter().map(|l| lattice_form(l, &perms)).collect();
    let distinct: BTreeSet<Relation> = forms.iter().copied().collect();
    if distinct.len() != forms.len() {
        return Err(format!("isomorphic duplicates at size {n}"));
    }
    if distinct != oracle {
        return Err(format!("size {n}: generator {} classes, oracle {}", distinct.len(), oracle.len()));
    }
    Ok(oracle.len())
}
