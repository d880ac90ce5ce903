//! Detection of the diamond `M3` and pentagon `N5` as sublattices.
//!
//! A lattice is distributive exactly when neither occurs, which gives an
//! independent cross-check of the direct triple scan in
//! [`Lattice::is_distributive`].

use serde::{Deserialize, Serialize};

use super::Lattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SublatticeKind {
    M3,
    N5,
}

/// Five elements of the ambient lattice forming `M3` or `N5`.
///
/// For `M3` the embedding is `[bottom, p, q, r, top]` with `p, q, r` the
/// pairwise incomparable middle elements. For `N5` it is
/// `[bottom, low, high, side, top]` with `low < high` and `side` incomparable
/// to both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SublatticeWitness {
    pub kind: SublatticeKind,
    pub embedding: [usize; 5],
}

impl SublatticeWitness {
    /// Re-checks closure under the ambient meet and join and the shape.
    pub fn verify(&self, l: &Lattice) -> bool {
        let e = self.embedding;
        if e.iter().any(|&x| x >= l.len()) {
            return false;
        }
        let mut sorted = e;
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let closed = e
            .iter()
            .all(|&x| e.iter().all(|&y| e.contains(&l.meet(x, y)) && e.contains(&l.join(x, y))));
        if !closed {
            return false;
        }
        let [bot, x, y, z, top] = e;
        let bounds = [x, y, z].iter().all(|&m| l.leq(bot, m) && l.leq(m, top));
        let incomparable = |a: usize, b: usize| !l.leq(a, b) && !l.leq(b, a);
        bounds
            && match self.kind {
                SublatticeKind::M3 => {
                    incomparable(x, y)
                        && incomparable(x, z)
                        && incomparable(y, z)
                        && [(x, y), (x, z), (y, z)]
                            .iter()
                            .all(|&(a, b)| l.meet(a, b) == bot && l.join(a, b) == top)
                }
                SublatticeKind::N5 => {
                    // x = low, y = high, z = side
                    l.leq(x, y)
                        && x != y
                        && incomparable(x, z)
                        && incomparable(y, z)
                        && l.meet(y, z) == bot
                        && l.meet(x, z) == bot
                        && l.join(x, z) == top
                        && l.join(y, z) == top
                }
            }
    }
}

/// Finds an `N5` or `M3` sublattice, preferring `N5` (whose absence is modularity).
pub fn find_forbidden_sublattice(l: &Lattice) -> Option<SublatticeWitness> {
    find_n5(l).or_else(|| find_m3(l))
}

fn find_n5(l: &Lattice) -> Option<SublatticeWitness> {
    let n = l.len();
    for low in 0..n {
        for high in 0..n {
            if low == high || !l.leq(low, high) {
                continue;
            }
            for side in 0..n {
                if l.leq(side, high) || l.leq(high, side) || l.leq(side, low) || l.leq(low, side) {
                    continue;
                }
                let bot = l.meet(high, side);
                let top = l.join(low, side);
                if l.meet(low, side) == bot && l.join(high, side) == top {
                    return Some(SublatticeWitness {
                        kind: SublatticeKind::N5,
                        embedding: [bot, low, high, side, top],
                    });
                }
            }
        }
    }
    None
}

fn find_m3(l: &Lattice) -> Option<SublatticeWitness> {
    let n = l.len();
    for p in 0..n {
        for q in p + 1..n {
            if l.leq(p, q) || l.leq(q, p) {
                continue;
            }
            let bot = l.meet(p, q);
            let top = l.join(p, q);
            for r in q + 1..n {
                if l.meet(p, r) == bot
                    && l.meet(q, r) == bot
                    && l.join(p, r) == top
                    && l.join(q, r) == top
                    && r != bot
                    && r != top
                {
                    return Some(SublatticeWitness {
                        kind: SublatticeKind::M3,
                        embedding: [bot, p, q, r, top],
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::chain;

    #[test]
    fn diamond_and_pentagon() {
        let m3 = Lattice::parse("elements: 0 p q r 1\ncovers: 0<p,0<q,0<r,p<1,q<1,r<1").unwrap();
        let w = find_forbidden_sublattice(&m3).unwrap();
        assert_eq!(w.kind, SublatticeKind::M3);
        assert!(w.verify(&m3));

        let n5 = Lattice::parse("elements: 0 a b c 1\ncovers: 0<a, a<c, c<1, 0<b, b<1").unwrap();
        let w = find_forbidden_sublattice(&n5).unwrap();
        assert_eq!(w.kind, SublatticeKind::N5);
        assert!(w.verify(&n5));
    }

    #[test]
    fn none_in_distributive() {
        assert!(find_forbidden_sublattice(&chain(1)).is_none());
        assert!(find_forbidden_sublattice(&chain(6)).is_none());
        assert!(find_forbidden_sublattice(&crate::claims::grid()).is_none());
    }

    #[test]
    fn verify_rejects_non_witness() {
        let l = crate::claims::grid();
        let w = SublatticeWitness {
            kind: SublatticeKind::M3,
            embedding: [0, 1, 2, 3, 8],
        };
        assert!(!w.verify(&l));
    }
}
