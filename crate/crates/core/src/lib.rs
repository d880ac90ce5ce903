//! Finite bounded lattices, their ideals, and the zero-divisor graphs built
//! from them.
//!
//! The crate is organised bottom-up:
//!
//! - [`lattice`]: lattices from Hasse diagrams, the text file format,
//!   distributivity and modularity, `M3`/`N5` detection, isomorphism.
//! - [`ideal`]: ideals, filters, prime ideals, the quotient `(I:x)` and the
//!   two radicals (primes contained in `I`, primes containing `I`).
//! - [`graph`]: exact invariants of small graphs (diameter, girth, cut
//!   vertices, bridges, core, clique and chromatic numbers, isomorphism).
//! - [`zdgraph`]: `Γ(L)` and `Γ_I(L)`, DOT export.
//! - [`claims`]: one checker per claimed statement, with self-validating
//!   counterexample witnesses and the built-in fixtures.
//! - [`census`]: every lattice up to eight elements, claim sweeps and
//!   counterexample search.
//! - [`cli`]: the command implementations behind the `zdlattice` binary.
//!
//! ```
//! use zdlattice::{claims, ideal::IdealSet, zdgraph};
//!
//! let l = claims::grid();
//! let gamma = zdgraph::build_gamma(&l);
//! let gamma_zero = zdgraph::build_gamma_i(&l, &IdealSet::zero(&l)).unwrap();
//! assert_eq!((gamma.vertex_count(), gamma_zero.vertex_count()), (5, 4));
//! ```

pub mod bitset;
pub mod census;
pub mod claims;
pub mod cli;
pub mod graph;
pub mod ideal;
pub mod lattice;
pub mod zdgraph;

pub use bitset::BitSet;
pub use lattice::{Lattice, LatticeSpec};

/// Any error the library reports.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] lattice::ParseError),
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
    #[error(transparent)]
    Ideal(#[from] ideal::IdealError),
    #[error(transparent)]
    Graph(#[from] zdgraph::ZdGraphError),
    #[error(transparent)]
    Claim(#[from] claims::ClaimError),
    #[error(transparent)]
    Census(#[from] census::CensusError),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
}
