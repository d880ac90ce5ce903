//! Lattices up to isomorphism, by size, with the distributive and modular counts.

use zdlattice::census::lattices_of_size;

fn main() {
    println!("size  lattices  modular  distributive");
    for n in 1..=8 {
        let ls = lattices_of_size(n);
        let modular = ls.iter().filter(|l| l.is_modular()).count();
        let distributive = ls.iter().filter(|l| l.is_distributive()).count();
        println!("{n:>4}  {:>8}  {modular:>7}  {distributive:>12}", ls.len());
    }
    println!();
    for l in lattices_of_size(5) {
        println!("{}", l.to_text());
    }
}
