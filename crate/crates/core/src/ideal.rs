//! Ideals, filters, prime ideals, the quotient `(I:x)` and radicals.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::lattice::Lattice;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("{0} is not an ideal (must be non-empty, down-closed and join-closed)")]
    NotAnIdeal(String),
    #[error("the ideal is the whole lattice; a proper ideal is required")]
    Improper,
    #[error("set refers to element {index} outside a lattice of {size} elements")]
    OutOfRange { index: usize, size: usize },
}

/// Verified properties of an [`IdealSet`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealFlags {
    pub is_ideal: bool,
    pub is_proper: bool,
    pub is_prime: bool,
    pub is_filter: bool,
}

/// A subset of a lattice together with its verified ideal-theoretic status.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealSet {
    members: BitSet,
    lattice_size: usize,
    flags: IdealFlags,
}

impl IdealSet {
    /// Classifies an arbitrary subset.
    pub fn classify(l: &Lattice, members: BitSet) -> Result<IdealSet, IdealError> {
        if let Some(i) = members.difference(l.elements()).first() {
            return Err(IdealError::OutOfRange { index: i, size: l.len() });
        }
        Ok(IdealSet {
            members,
            lattice_size: l.len(),
            flags: IdealFlags {
                is_ideal: is_ideal(l, members),
                is_proper: members != l.elements(),
                is_prime: is_prime_ideal(l, members),
                is_filter: is_filter(l, members),
            },
        })
    }

    /// Accepts `members` only if it is an ideal of `l`.
    pub fn ideal(l: &Lattice, members: BitSet) -> Result<IdealSet, IdealError> {
        let s = IdealSet::classify(l, members)?;
        if s.flags.is_ideal {
            Ok(s)
        } else {
            Err(IdealError::NotAnIdeal(l.format_set(members)))
        }
    }

    /// Accepts `members` only if it is a proper ideal of `l`.
    pub fn proper_ideal(l: &Lattice, members: BitSet) -> Result<IdealSet, IdealError> {
        let s = IdealSet::ideal(l, members)?;
        if s.flags.is_proper {
            Ok(s)
        } else {
            Err(IdealError::Improper)
        }
    }

    /// `(a]`.
    pub fn principal(l: &Lattice, a: usize) -> IdealSet {
        let members = l.principal_ideal(a).expect("index in range");
        IdealSet::ideal(l, members).expect("principal ideals are ideals")
    }

    /// `{0}`.
    pub fn zero(l: &Lattice) -> IdealSet {
        IdealSet::principal(l, l.bottom())
    }

    pub fn members(&self) -> BitSet {
        self.members
    }

    pub fn lattice_size(&self) -> usize {
        self.lattice_size
    }

    pub fn flags(&self) -> IdealFlags {
        self.flags
    }

    pub fn is_proper(&self) -> bool {
        self.flags.is_proper
    }

    pub fn is_prime(&self) -> bool {
        self.flags.is_prime
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Non-empty, down-closed and join-closed.
pub fn is_ideal(l: &Lattice, s: BitSet) -> bool {
    !s.is_empty()
        && s.iter().all(|x| {
            l.principal_ideal(x).is_ok_and(|d| d.is_subset(s)) && s.iter().all(|y| s.contains(l.join(x, y)))
        })
}

/// Non-empty, up-closed and meet-closed.
pub fn is_filter(l: &Lattice, s: BitSet) -> bool {
    !s.is_empty()
        && s.iter().all(|x| {
            l.upper_set(x).is_ok_and(|u| u.is_subset(s)) && s.iter().all(|y| s.contains(l.meet(x, y)))
        })
}

/// A proper ideal `P` with `a ∧ b ∈ P ⇒ a ∈ P or b ∈ P`.
pub fn is_prime_ideal(l: &Lattice, s: BitSet) -> bool {
    let n = l.len();
    let prime = is_ideal(l, s)
        && s != l.elements()
        && (0..n).all(|a| (0..n).all(|b| !s.contains(l.meet(a, b)) || s.contains(a) || s.contains(b)));
    debug_assert_eq!(
        prime,
        is_prime_by_complement(l, s),
        "prime test disagrees with complement-filter test on {}",
        l.format_set(s)
    );
    prime
}

/// An ideal is prime exactly when its complement is a filter.
pub fn is_prime_by_complement(l: &Lattice, s: BitSet) -> bool {
    is_ideal(l, s) && is_filter(l, l.elements().difference(s))
}

/// Every ideal of `l`, ordered by cardinality and then lexicographically.
///
/// In a finite lattice an ideal contains the join of its members, so the
/// ideals are exactly the principal ideals `(a]`.
pub fn enumerate_ideals(l: &Lattice) -> Vec<IdealSet> {
    let mut sets: Vec<BitSet> = (0..l.len()).map(|a| l.principal_ideal(a).expect("in range")).collect();
    sets.sort_by(|a, b| a.canonical_cmp(*b));
    sets.dedup();
    sets.into_iter()
        .map(|s| IdealSet::ideal(l, s).expect("principal ideals are ideals"))
        .collect()
}

pub fn enumerate_prime_ideals(l: &Lattice) -> Vec<IdealSet> {
    enumerate_ideals(l).into_iter().filter(|i| i.is_prime()).collect()
}

/// `(I:x) = { z : z ∧ x ∈ I }`.
pub fn quotient_ideal(l: &Lattice, ideal: &IdealSet, x: usize) -> BitSet {
    (0..l.len()).filter(|&z| ideal.contains(l.meet(z, x))).collect()
}

/// Which primes are attached to an ideal when forming its radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RadicalVariant {
    /// Primes `P` with `P ⊆ I`.
    Contained,
    /// Primes `P` with `I ⊆ P`.
    Containing,
}

impl RadicalVariant {
    pub const ALL: [RadicalVariant; 2] = [RadicalVariant::Contained, RadicalVariant::Containing];

    pub fn qualifies(self, prime: BitSet, ideal: BitSet) -> bool {
        match self {
            RadicalVariant::Contained => prime.is_subset(ideal),
            RadicalVariant::Containing => ideal.is_subset(prime),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RadicalVariant::Contained => "contained",
            RadicalVariant::Containing => "containing",
        }
    }
}

impl fmt::Display for RadicalVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RadicalVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "contained" => Ok(RadicalVariant::Contained),
            "containing" => Ok(RadicalVariant::Containing),
            _ => Err(format!("unknown radical variant `{s}` (expected contained or containing)")),
        }
    }
}

/// The intersection of the qualifying prime family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalResult {
    /// Absent when no prime qualifies.
    pub value: Option<BitSet>,
    pub family_size: usize,
    /// The qualifying primes in enumeration order.
    pub family: Vec<BitSet>,
}

pub fn radical(l: &Lattice, ideal: &IdealSet, variant: RadicalVariant) -> RadicalResult {
    let family: Vec<BitSet> = enumerate_prime_ideals(l)
        .into_iter()
        .map(|p| p.members())
        .filter(|&p| variant.qualifies(p, ideal.members()))
        .collect();
    let value = family.iter().copied().reduce(BitSet::intersection);
    RadicalResult {
        value,
        family_size: family.len(),
        family,
    }
}

/// A smallest family of qualifying primes whose intersection is exactly the
/// ideal, or `None` if no subfamily achieves it.
pub fn is_finite_intersection_of_primes(
    l: &Lattice,
    ideal: &IdealSet,
    variant: RadicalVariant,
) -> Option<Vec<BitSet>> {
    let target = ideal.members();
    let family = radical(l, ideal, variant).family;
    // A subfamily can only reach the target if the whole family does, since
    // intersections shrink as primes are added; for primes contained in the
    // target the intersection must still cover it, so every member must be
    // the target itself.
    let whole = family.iter().copied().reduce(BitSet::intersection)?;
    match variant {
        RadicalVariant::Containing if whole != target => return None,
        RadicalVariant::Contained if !target.is_subset(whole) => {
            return family.contains(&target).then(|| vec![target]);
        }
        _ => {}
    }
    for size in 1..=family.len() {
        let mut chosen = Vec::with_capacity(size);
        if let Some(found) = search_subfamily(&family, target, size, 0, l.elements(), &mut chosen) {
            return Some(found);
        }
    }
    None
}

fn search_subfamily(
    family: &[BitSet],
    target: BitSet,
    size: usize,
    start: usize,
    acc: BitSet,
    chosen: &mut Vec<BitSet>,
) -> Option<Vec<BitSet>> {
    if chosen.len() == size {
        return (acc == target).then(|| chosen.clone());
    }
    // Intersections only shrink; once below the target no extension recovers.
    if !target.is_subset(acc) {
        return None;
    }
    for i in start..family.len() {
        if family.len() - i < size - chosen.len() {
            break;
        }
        chosen.push(family[i]);
        let r = search_subfamily(family, target, size, i + 1, acc.intersection(family[i]), chosen);
        chosen.pop();
        if r.is_some() {
            return r;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::chain;

    fn grid() -> Lattice {
        crate::claims::grid()
    }

    fn set(l: &Lattice, labels: &str) -> BitSet {
        l.set_from_labels(labels.split(',')).unwrap()
    }

    #[test]
    fn ideal_membership() {
        let l = grid();
        assert!(is_ideal(&l, set(&l, "0,c,a")));
        assert!(is_ideal(&l, BitSet::singleton(l.bottom())));
        assert!(!is_ideal(&l, set(&l, "0,a")));
        assert!(!is_ideal(&l, BitSet::empty()));
        // down-closed but not join-closed
        assert!(!is_ideal(&l, set(&l, "0,c,x")));
        assert!(is_filter(&l, set(&l, "b,d,1")));
        assert!(!is_filter(&l, set(&l, "a,b,z,d,1")));
    }

    #[test]
    fn prime_membership() {
        let l = grid();
        assert!(is_prime_ideal(&l, set(&l, "0,c,a")));
        assert!(!is_prime_ideal(&l, set(&l, "0,x")));
        assert!(!is_prime_ideal(&l, set(&l, "0")));
        assert!(!is_prime_ideal(&l, l.elements()));
    }

    #[test]
    fn enumeration() {
        let two = chain(2);
        let ideals: Vec<_> = enumerate_ideals(&two).iter().map(|i| i.members()).collect();
        assert_eq!(ideals, vec![BitSet::singleton(0), BitSet::full(2)]);

        let three = chain(3);
        let primes: Vec<_> = enumerate_prime_ideals(&three).iter().map(|i| three.format_set(i.members())).collect();
        assert_eq!(primes, vec!["{0}", "{0,a}"]);

        let l = grid();
        let primes: Vec<_> = enumerate_prime_ideals(&l).iter().map(|i| i.members()).collect();
        let expected = ["a", "b", "z", "d"].map(|p| l.principal_ideal(l.index_of(p).unwrap()).unwrap());
        assert_eq!(primes.len(), 4);
        for e in expected {
            assert!(primes.contains(&e));
        }
        assert_eq!(primes[0], set(&l, "0,c,a"));
        assert_eq!(primes[1], set(&l, "0,x,b"));
    }

    #[test]
    fn quotient() {
        let l = grid();
        let zero = IdealSet::zero(&l);
        assert_eq!(quotient_ideal(&l, &zero, l.bottom()), l.elements());
        assert_eq!(quotient_ideal(&l, &zero, l.index_of("a").unwrap()), set(&l, "0,x,b"));
        let z = IdealSet::principal(&l, l.index_of("z").unwrap());
        assert_eq!(quotient_ideal(&l, &z, l.top()), z.members());
    }

    #[test]
    fn radicals_grid() {
        let l = grid();
        let z = IdealSet::principal(&l, l.index_of("z").unwrap());
        let r = radical(&l, &z, RadicalVariant::Contained);
        assert_eq!(r.value, Some(set(&l, "0,c,a")));
        assert_eq!(r.family_size, 2);
        assert_eq!(r.family, vec![set(&l, "0,c,a"), set(&l, "0,c,a,x,y,z")]);

        let r = radical(&l, &z, RadicalVariant::Containing);
        assert_eq!(r.value, Some(z.members()));
        assert_eq!(r.family_size, 1);

        let zero = IdealSet::zero(&l);
        let r = radical(&l, &zero, RadicalVariant::Contained);
        assert_eq!(r.value, None);
        assert_eq!(r.family_size, 0);
    }

    #[test]
    fn radical_three_chain() {
        let l = chain(3);
        let i = IdealSet::principal(&l, 1);
        let r = radical(&l, &i, RadicalVariant::Contained);
        assert_eq!(r.value, Some(BitSet::singleton(0)));
        assert_eq!(r.family_size, 2);
    }

    #[test]
    fn finite_intersections() {
        let l = grid();
        let z = IdealSet::principal(&l, l.index_of("z").unwrap());
        for v in RadicalVariant::ALL {
            assert_eq!(is_finite_intersection_of_primes(&l, &z, v), Some(vec![z.members()]));
        }
        // {0} = (a] ∩ (b] needs two primes and only the containing family has them.
        let zero = IdealSet::zero(&l);
        let w = is_finite_intersection_of_primes(&l, &zero, RadicalVariant::Containing).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.iter().copied().reduce(BitSet::intersection), Some(zero.members()));
        assert_eq!(is_finite_intersection_of_primes(&l, &zero, RadicalVariant::Contained), None);

        let two = chain(2);
        let zero = IdealSet::zero(&two);
        assert_eq!(
            is_finite_intersection_of_primes(&two, &zero, RadicalVariant::Containing),
            Some(vec![BitSet::singleton(0)])
        );
    }

    #[test]
    fn constructors_validate() {
        let l = grid();
        assert!(matches!(IdealSet::ideal(&l, set(&l, "0,a")), Err(IdealError::NotAnIdeal(_))));
        assert_eq!(IdealSet::proper_ideal(&l, l.elements()), Err(IdealError::Improper));
        assert!(matches!(
            IdealSet::classify(&l, BitSet::singleton(40)),
            Err(IdealError::OutOfRange { .. })
        ));
        let p = IdealSet::ideal(&l, set(&l, "0,c,a")).unwrap();
        assert!(p.flags().is_prime && p.flags().is_proper && !p.flags().is_filter);
    }
}
