//! Finite bounded lattices given by Hasse diagrams.
//!
//! A [`Lattice`] is built once from a [`LatticeSpec`]: the order is the
//! reflexive-transitive closure of the covers, and the meet and join tables are
//! precomputed. Construction fails if the covers do not describe a bounded
//! lattice, so every query afterwards is a table lookup.

mod iso;
mod parse;
mod sublattice;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::bitset::BitSet;

pub use iso::lattices_isomorphic;
pub(crate) use iso::{invariant_vector as invariant_key, ElementProfile as ElementProfileKey};
pub use parse::{LatticeSpec, ParseError, ParseErrorKind};
pub use sublattice::{find_forbidden_sublattice, SublatticeKind, SublatticeWitness};

/// Largest supported element count.
pub const MAX_ELEMENTS: usize = BitSet::CAPACITY;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("{0} elements exceed the supported maximum of {MAX_ELEMENTS}")]
    TooLarge(usize),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("cover refers to unknown label `{0}`")]
    UnknownLabel(String),
    #[error("covers are cyclic: `{0}` and `{1}` lie below each other")]
    NotAPoset(String, String),
    #[error("no unique bottom element (minimal elements: {0:?})")]
    NoUniqueBottom(Vec<String>),
    #[error("no unique top element (maximal elements: {0:?})")]
    NoUniqueTop(Vec<String>),
    #[error("`{0}` and `{1}` have no greatest lower bound")]
    NoMeet(String, String),
    #[error("`{0}` and `{1}` have no least upper bound")]
    NoJoin(String, String),
    #[error("element index {index} out of range for a lattice of {size} elements")]
    IndexOutOfRange { index: usize, size: usize },
}

/// A finite bounded lattice over the dense indices `0..len()`.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    labels: Vec<String>,
    /// `down[a]` = { x : x ≤ a }.
    down: Vec<BitSet>,
    /// `up[a]` = { x : a ≤ x }.
    up: Vec<BitSet>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    pub fn parse(text: &str) -> Result<Lattice, crate::Error> {
        let spec = LatticeSpec::parse(text)?;
        Ok(Lattice::from_spec(&spec)?)
    }

    pub fn from_spec(spec: &LatticeSpec) -> Result<Lattice, LatticeError> {
        let n = spec.element_labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in spec.element_labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(LatticeError::DuplicateLabel(l.clone()));
            }
        }
        let mut covers = Vec::with_capacity(spec.cover_pairs.len());
        for (lo, hi) in &spec.cover_pairs {
            let lookup = |l: &String| {
                index
                    .get(l.as_str())
                    .copied()
                    .ok_or_else(|| LatticeError::UnknownLabel(l.clone()))
            };
            covers.push((lookup(lo)?, lookup(hi)?));
        }
        Lattice::from_covers(spec.element_labels.clone(), &covers)
    }

    /// Builds from labels and index cover pairs `(lower, upper)`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Lattice, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_ELEMENTS {
            return Err(LatticeError::TooLarge(n));
        }
        let mut up: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
        for &(lo, hi) in covers {
            for i in [lo, hi] {
                if i >= n {
                    return Err(LatticeError::IndexOutOfRange { index: i, size: n });
                }
            }
            up[lo].insert(hi);
        }
        // Warshall over bitset rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        Lattice::from_up_sets(labels, up)
    }

    /// Builds from a full order given as up-sets (`up[a]` = { x : a ≤ x }).
    /// The relation must already be reflexive and transitive.
    pub(crate) fn from_up_sets(labels: Vec<String>, up: Vec<BitSet>) -> Result<Lattice, LatticeError> {
        let n = labels.len();
        let mut down = vec![BitSet::empty(); n];
        for (a, &ups) in up.iter().enumerate() {
            for b in ups {
                down[b].insert(a);
            }
        }
        for a in 0..n {
            let both = up[a].intersection(down[a]).without(a);
            if let Some(b) = both.first() {
                return Err(LatticeError::NotAPoset(labels[a].clone(), labels[b].clone()));
            }
        }

        let all = BitSet::full(n);
        let minimal: Vec<usize> = (0..n).filter(|&a| down[a] == BitSet::singleton(a)).collect();
        let maximal: Vec<usize> = (0..n).filter(|&a| up[a] == BitSet::singleton(a)).collect();
        let bottom = match minimal.as_slice() {
            [b] if up[*b] == all => *b,
            _ => return Err(LatticeError::NoUniqueBottom(minimal.iter().map(|&i| labels[i].clone()).collect())),
        };
        let top = match maximal.as_slice() {
            [t] if down[*t] == all => *t,
            _ => return Err(LatticeError::NoUniqueTop(maximal.iter().map(|&i| labels[i].clone()).collect())),
        };

        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let lower = down[a].intersection(down[b]);
                let m = lower
                    .iter()
                    .find(|&c| lower.is_subset(down[c]))
                    .ok_or_else(|| LatticeError::NoMeet(labels[a].clone(), labels[b].clone()))?;
                let upper = up[a].intersection(up[b]);
                let j = upper
                    .iter()
                    .find(|&c| upper.is_subset(up[c]))
                    .ok_or_else(|| LatticeError::NoJoin(labels[a].clone(), labels[b].clone()))?;
                meet[a][b] = m;
                meet[b][a] = m;
                join[a][b] = j;
                join[b][a] = j;
            }
        }

        Ok(Lattice {
            labels,
            down,
            up,
            meet,
            join,
            bottom,
            top,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; a lattice has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn elements(&self) -> BitSet {
        BitSet::full(self.len())
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// Greatest lower bound. Panics on an out-of-range index; see [`Lattice::try_meet`].
    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn try_meet(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.meet(a, b))
    }

    pub fn try_join(&self, a: usize, b: usize) -> Result<usize, LatticeError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.join(a, b))
    }

    fn check(&self, a: usize) -> Result<(), LatticeError> {
        if a < self.len() {
            Ok(())
        } else {
            Err(LatticeError::IndexOutOfRange {
                index: a,
                size: self.len(),
            })
        }
    }

    /// `[a]^u = { x : a ≤ x }`.
    pub fn upper_set(&self, a: usize) -> Result<BitSet, LatticeError> {
        self.check(a)?;
        Ok(self.up[a])
    }

    /// `(a] = { x : x ≤ a }`.
    pub fn principal_ideal(&self, a: usize) -> Result<BitSet, LatticeError> {
        self.check(a)?;
        Ok(self.down[a])
    }

    /// Elements strictly below `a` with nothing in between.
    pub fn lower_covers(&self, a: usize) -> BitSet {
        let strict = self.down[a].without(a);
        strict
            .iter()
            .filter(|&b| self.up[b].intersection(strict).without(b).is_empty())
            .collect()
    }

    pub fn upper_covers(&self, a: usize) -> BitSet {
        let strict = self.up[a].without(a);
        strict
            .iter()
            .filter(|&b| self.down[b].intersection(strict).without(b).is_empty())
            .collect()
    }

    /// The Hasse diagram as `(lower, upper)` pairs, sorted.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in self.upper_covers(a) {
                out.push((a, b));
            }
        }
        out
    }

    /// Length of the longest chain from the bottom up to `a`.
    pub fn height(&self, a: usize) -> usize {
        iso::heights(self)[a]
    }

    pub fn to_spec(&self) -> LatticeSpec {
        LatticeSpec {
            element_labels: self.labels.clone(),
            cover_pairs: self
                .cover_pairs()
                .into_iter()
                .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
                .collect(),
        }
    }

    /// The lattice file text for this lattice.
    pub fn to_text(&self) -> String {
        self.to_spec().to_text()
    }

    /// Copy of the lattice with new labels.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Lattice, LatticeError> {
        assert_eq!(labels.len(), self.len());
        Lattice::from_covers(labels, &self.cover_pairs())
    }

    /// Renders a set as `{l1,l2,...}` in index order.
    pub fn format_set(&self, s: BitSet) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Resolves labels to a set. Unknown labels come back as the error value.
    pub fn set_from_labels<'a, I>(&self, labels: I) -> Result<BitSet, String>
    where
        I: IntoIterator<Item = &'a str>,
    {
        labels
            .into_iter()
            .map(|l| self.index_of(l).ok_or_else(|| l.to_string()))
            .collect()
    }

    /// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for every triple.
    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.meet(a, self.join(b, c)) == self.join(self.meet(a, b), self.meet(a, c))))
        })
    }

    /// The dual law `a ∨ (b ∧ c) = (a ∨ b) ∧ (a ∨ c)` for every triple.
    /// Equivalent to [`Lattice::is_distributive`] in any lattice.
    pub fn is_join_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.join(a, self.meet(b, c)) == self.meet(self.join(a, b), self.join(a, c))))
        })
    }

    /// `a ≤ c ⇒ a ∨ (b ∧ c) = (a ∨ b) ∧ c`.
    pub fn is_modular(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            self.up[a]
                .iter()
                .all(|c| (0..n).all(|b| self.join(a, self.meet(b, c)) == self.meet(self.join(a, b), c)))
        })
    }

    pub fn is_chain(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.leq(a, b) || self.leq(b, a)))
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("labels", &self.labels)
            .field("covers", &self.cover_pairs())
            .finish()
    }
}

/// The chain `0 < a < b < ... < 1` with `n` elements.
pub fn chain(n: usize) -> Lattice {
    let labels = generated_labels(n);
    let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Lattice::from_covers(labels, &covers).expect("a chain is a lattice")
}

/// Labels `0, a, b, ..., 1` for an `n`-element lattice whose bottom is index 0
/// and top is index `n-1`.
pub(crate) fn generated_labels(n: usize) -> Vec<String> {
    match n {
        0 => vec![],
        1 => vec!["0".into()],
        _ => {
            let mut labels = vec!["0".to_string()];
            labels.extend((0..n - 2).map(interior_label));
            labels.push("1".into());
            labels
        }
    }
}

fn interior_label(i: usize) -> String {
    const ALPHA: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    if i < ALPHA.len() {
        (ALPHA[i] as char).to_string()
    } else {
        format!("e{i}")
    }
}
