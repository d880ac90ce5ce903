//! The same pentagon written two ways, matched by the isomorphism search.

use zdlattice::lattice::lattices_isomorphic;
use zdlattice::Lattice;

fn main() {
    let a = Lattice::parse("elements: 0 a b c 1\ncovers: 0<a, a<b, b<1, 0<c, c<1").unwrap();
    let b = Lattice::parse("elements: top side hi lo bot\ncovers: bot<lo, lo<hi, hi<top, bot<side, side<top").unwrap();
    let diamond = Lattice::parse("elements: 0 p q r 1\ncovers: 0<p, 0<q, 0<r, p<1, q<1, r<1").unwrap();

    match lattices_isomorphic(&a, &b) {
        Some(map) => {
            for (x, &y) in map.iter().enumerate() {
                println!("{} -> {}", a.label(x), b.label(y));
            }
        }
        None => println!("not isomorphic"),
    }
    println!("pentagon vs diamond: {:?}", lattices_isomorphic(&a, &diamond));
}
