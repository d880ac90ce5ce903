//! Γ(L) and Γ_{0}(L) on the nine-element grid lattice.

use zdlattice::claims::grid;
use zdlattice::ideal::IdealSet;
use zdlattice::zdgraph::{build_gamma, build_gamma_i, gamma_without_zero, graphs_isomorphic};

fn main() {
    let l = grid();
    let gamma = build_gamma(&l);
    let gamma0 = build_gamma_i(&l, &IdealSet::zero(&l)).unwrap();

    println!("Γ(L):      V = {{{}}}", gamma.vertex_labels().join(","));
    print!("{}", gamma.invariants_report());
    println!();
    println!("Γ_{{0}}(L): V = {{{}}}", gamma0.vertex_labels().join(","));
    print!("{}", gamma0.invariants_report());
    println!();

    println!("Γ ≅ Γ_{{0}}:       {}", graphs_isomorphic(&gamma, &gamma0).is_some());
    println!("Γ - 0 ≅ Γ_{{0}}:   {}", graphs_isomorphic(&gamma_without_zero(&l), &gamma0).is_some());
}
