//! Distributivity and modularity via M3 / N5 witnesses.

use zdlattice::claims::{truncation, grid};
use zdlattice::lattice::find_forbidden_sublattice;
use zdlattice::Lattice;

fn report(name: &str, l: &Lattice) {
    print!("{name:<12} distributive={:<5} modular={:<5}", l.is_distributive(), l.is_modular());
    match find_forbidden_sublattice(l) {
        Some(w) => {
            let els: Vec<&str> = w.embedding.iter().map(|&e| l.label(e)).collect();
            println!(" {:?}: {}", w.kind, els.join(" "));
        }
        None => println!(),
    }
}

fn main() {
    let m3 = Lattice::parse("elements: 0 p q r 1\ncovers: 0<p, 0<q, 0<r, p<1, q<1, r<1").unwrap();
    let n5 = Lattice::parse("elements: 0 a b c 1\ncovers: 0<a, a<b, b<1, 0<c, c<1").unwrap();
    report("M3", &m3);
    report("N5", &n5);
    report("grid", &grid());
    for n in 6..=8 {
        report(&format!("trunc n={n}"), &truncation(n).unwrap());
    }
}
