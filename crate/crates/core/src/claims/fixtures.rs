//! Built-in lattices: the nine-element grid (the product of two 3-chains) and
//! finite truncations of an inclusion lattice of subsets of `{1..n}`.

use thiserror::Error;

use crate::bitset::BitSet;
use crate::ideal::IdealSet;
use crate::lattice::{Lattice, LatticeSpec};

/// The grid as a Hasse diagram. `y` is the centre; all four of its edges
/// (`c–y`, `x–y`, `y–z`, `y–d`) are covers.
pub const GRID_TEXT: &str = "\
# the 3x3 grid: bounded and distributive
elements: 0 a c x b y z d 1
covers: 0<c, c<a, a<z, z<1,
        0<x, x<b, b<d, d<1,
        c<y, x<y, y<z, y<d
";

pub fn grid_spec() -> LatticeSpec {
    LatticeSpec::parse(GRID_TEXT).expect("built-in fixture parses")
}

pub fn grid() -> Lattice {
    Lattice::from_spec(&grid_spec()).expect("built-in fixture is a lattice")
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("the truncation needs n >= 6, got {0}")]
pub struct TruncationTooSmall(pub usize);

/// Subsets of `{1..n}` ordered by inclusion:
/// `∅, {3}, {1}, {1,2}`, the chain `{4}, {4,5}, ..., {4..n}`, and `{1..n}`.
///
/// Labels use `{i..j}` for runs so that they stay valid in the file format.
pub fn truncation(n: usize) -> Result<Lattice, TruncationTooSmall> {
    Ok(truncation_with_ideal(n)?.0)
}

/// The truncation together with its distinguished ideal `{∅, {4}, ..., {4..n}}`.
pub fn truncation_with_ideal(n: usize) -> Result<(Lattice, IdealSet), TruncationTooSmall> {
    if n < 6 {
        return Err(TruncationTooSmall(n));
    }
    let run = |lo: u32, hi: u32| -> u64 { (lo..=hi).map(|i| 1u64 << i).sum() };
    let mut sets: Vec<(u64, String)> = vec![
        (0, "{}".into()),
        (run(3, 3), "{3}".into()),
        (run(1, 1), "{1}".into()),
        (run(1, 2), "{1..2}".into()),
    ];
    for k in 4..=n as u32 {
        let label = if k == 4 { "{4}".to_string() } else { format!("{{4..{k}}}") };
        sets.push((run(4, k), label));
    }
    sets.push((run(1, n as u32), format!("{{1..{n}}}")));

    let up: Vec<BitSet> = sets
        .iter()
        .map(|&(s, _)| {
            sets.iter()
                .enumerate()
                .filter(|&(_, &(t, _))| s & !t == 0)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let labels = sets.iter().map(|(_, l)| l.clone()).collect();
    let lattice = Lattice::from_up_sets(labels, up).expect("the truncation is a lattice");
    let chain: BitSet = [0].into_iter().chain(4..4 + (n - 3)).collect();
    let ideal = IdealSet::ideal(&lattice, chain).expect("the chain is an ideal");
    Ok((lattice, ideal))
}

/// A named lattice with the ideals worth looking at on it.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub lattice: Lattice,
    pub distinguished_ideals: Vec<(String, IdealSet)>,
}

pub fn builtin_fixtures() -> Vec<Fixture> {
    let fig = grid();
    let z = fig.index_of("z").expect("z present");
    let grid_fixture = Fixture {
        name: "grid".into(),
        distinguished_ideals: vec![
            ("{0}".into(), IdealSet::zero(&fig)),
            ("(z]".into(), IdealSet::principal(&fig, z)),
        ],
        lattice: fig,
    };
    let (trunc, chain) = truncation_with_ideal(6).expect("n = 6 is valid");
    let truncation = Fixture {
        name: "truncation-n6".into(),
        lattice: trunc,
        distinguished_ideals: vec![("chain".into(), chain)],
    };
    vec![grid_fixture, truncation]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_shape() {
        let spec = grid_spec();
        assert_eq!(spec.element_labels.len(), 9);
        assert_eq!(spec.cover_pairs.len(), 12);
        let l = grid();
        assert!(l.is_distributive());
        assert_eq!(l.cover_pairs().len(), 12);
    }

    #[test]
    fn truncation_n6() {
        let (l, ideal) = truncation_with_ideal(6).unwrap();
        assert_eq!(l.len(), 8);
        assert_eq!(l.label(l.bottom()), "{}");
        assert_eq!(l.label(l.top()), "{1..6}");
        assert!(!l.is_distributive());
        let i = |s: &str| l.index_of(s).unwrap();
        assert_eq!(l.meet(i("{1..2}"), i("{3}")), l.bottom());
        assert_eq!(l.join(i("{1}"), i("{3}")), l.top());
        assert_eq!(l.format_set(ideal.members()), "{{},{4},{4..5},{4..6}}");
    }

    #[test]
    fn truncation_grows() {
        for n in 6..12 {
            let l = truncation(n).unwrap();
            assert_eq!(l.len(), n + 2);
            assert!(!l.is_distributive());
        }
        assert_eq!(truncation(5).unwrap_err(), TruncationTooSmall(5));
    }

    #[test]
    fn fixtures_listed() {
        let f = builtin_fixtures();
        assert_eq!(f.len(), 2);
        assert!(f[0].lattice.is_distributive());
        assert!(!f[1].lattice.is_distributive());
    }
}
