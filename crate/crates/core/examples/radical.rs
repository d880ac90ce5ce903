//! Both readings of √I, and the smallest lattice where the contained-primes
//! reading stops returning I.

use zdlattice::claims::grid;
use zdlattice::ideal::{radical, IdealSet, RadicalVariant};
use zdlattice::lattice::chain;

fn show(l: &zdlattice::Lattice, i: &IdealSet) {
    for variant in RadicalVariant::ALL {
        let r = radical(l, i, variant);
        let family: Vec<String> = r.family.iter().map(|p| l.format_set(*p)).collect();
        let value = r.value.map_or("(no qualifying prime)".to_string(), |v| l.format_set(v));
        println!("  {variant:<10} family [{}] -> {value}", family.join(" "));
    }
}

fn main() {
    let l = grid();
    let z = IdealSet::principal(&l, l.index_of("z").unwrap());
    println!("grid lattice, I = (z] = {}", l.format_set(z.members()));
    show(&l, &z);

    let c = chain(3);
    let i = IdealSet::ideal(&c, c.set_from_labels(["0", "a"]).unwrap()).unwrap();
    println!("3-chain, I = {}", c.format_set(i.members()));
    show(&c, &i);
}
