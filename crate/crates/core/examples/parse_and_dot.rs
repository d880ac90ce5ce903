//! Parse a Hasse diagram, then export Γ_I as Graphviz DOT.
//!
//!     cargo run --example parse_and_dot | dot -Tsvg > gamma.svg

use zdlattice::ideal::IdealSet;
use zdlattice::zdgraph::build_gamma_i;
use zdlattice::Lattice;

const BOOLEAN_CUBE: &str = "\
# subsets of {p,q,r}
elements: 0 p q r pq pr qr 1
covers: 0<p, 0<q, 0<r,
        p<pq, q<pq, p<pr, r<pr, q<qr, r<qr,
        pq<1, pr<1, qr<1
";

fn main() {
    let l = Lattice::parse(BOOLEAN_CUBE).unwrap();
    eprintln!("parsed {} elements, {} covers", l.len(), l.cover_pairs().len());
    eprint!("{}", l.to_text());
    let g = build_gamma_i(&l, &IdealSet::zero(&l)).unwrap();
    print!("{}", g.to_dot());
}
