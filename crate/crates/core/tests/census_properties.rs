//! Properties checked over every lattice of the census, against direct
//! re-computations from the definitions.

use zdlattice::census::{enumerate_lattices, evaluate, run_census, CensusConfig, IdealFilter};
use zdlattice::claims::{self, witness_revalidates, ClaimId, Status};
use zdlattice::ideal::{
    enumerate_ideals, is_filter, is_ideal, is_prime_by_complement, is_prime_ideal, quotient_ideal, radical, IdealSet,
    RadicalVariant,
};
use zdlattice::lattice::{find_forbidden_sublattice, SublatticeKind};
use zdlattice::zdgraph::{build_gamma, build_gamma_i, gamma_without_zero, graphs_isomorphic};
use zdlattice::{BitSet, Lattice, LatticeSpec};

fn census(max: usize) -> Vec<Lattice> {
    enumerate_lattices(max).collect()
}

fn subsets(n: usize) -> impl Iterator<Item = BitSet> {
    (0u64..1 << n).map(BitSet::from_bits)
}

/// Non-empty, down-closed, closed under joins; written against `leq`/`join` only.
fn oracle_is_ideal(l: &Lattice, s: BitSet) -> bool {
    !s.is_empty()
        && s.iter().all(|a| (0..l.len()).all(|x| !l.leq(x, a) || s.contains(x)))
        && s.iter().all(|a| s.iter().all(|b| s.contains(l.join(a, b))))
}

#[test]
fn forbidden_sublattices_decide_distributivity_and_modularity() {
    for l in census(8) {
        let w = find_forbidden_sublattice(&l);
        assert_eq!(l.is_distributive(), w.is_none(), "{}", l.to_text());
        assert_eq!(l.is_distributive(), l.is_join_distributive());
        if let Some(w) = w {
            assert!(w.verify(&l));
        }
        // the search tries N5 first, so an M3 witness means no N5 exists
        assert_eq!(l.is_modular(), w.is_none_or(|w| w.kind == SublatticeKind::M3));
    }
}

#[test]
fn text_round_trip_is_identity() {
    for l in census(7) {
        let text = l.to_text();
        let back = Lattice::parse(&text).unwrap();
        assert_eq!(back.to_text(), text);
        assert_eq!(LatticeSpec::parse(&text).unwrap(), l.to_spec());
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert_eq!(back.leq(a, b), l.leq(a, b));
            }
        }
    }
}

#[test]
fn ideal_enumeration_matches_subset_scan() {
    for l in census(6) {
        let found: Vec<BitSet> = enumerate_ideals(&l).iter().map(IdealSet::members).collect();
        let mut scanned: Vec<BitSet> = subsets(l.len()).filter(|&s| oracle_is_ideal(&l, s)).collect();
        scanned.sort_by(|a, b| a.canonical_cmp(*b));
        assert_eq!(found, scanned, "{}", l.to_text());
        for s in subsets(l.len()) {
            assert_eq!(is_ideal(&l, s), oracle_is_ideal(&l, s));
            assert_eq!(is_prime_ideal(&l, s), is_prime_by_complement(&l, s), "{}", l.format_set(s));
            let p = is_prime_ideal(&l, s);
            assert_eq!(p, is_ideal(&l, s) && s != l.elements() && is_filter(&l, l.elements().difference(s)));
        }
    }
}

#[test]
fn quotients_of_distributive_lattices_are_ideals() {
    for l in census(8).into_iter().filter(Lattice::is_distributive) {
        for i in enumerate_ideals(&l) {
            for x in 0..l.len() {
                let q = quotient_ideal(&l, &i, x);
                assert!(is_ideal(&l, q));
                assert!(i.members().is_subset(q));
                let direct: BitSet = (0..l.len()).filter(|&z| i.contains(l.meet(z, x))).collect();
                assert_eq!(q, direct);
            }
        }
    }
}

#[test]
fn radical_variants_bracket_the_ideal() {
    for l in census(7) {
        let primes: Vec<BitSet> = subsets(l.len()).filter(|&s| is_prime_by_complement(&l, s)).collect();
        for i in enumerate_ideals(&l).into_iter().filter(IdealSet::is_proper) {
            let m = i.members();
            let below = radical(&l, &i, RadicalVariant::Contained);
            let want: Vec<BitSet> = primes.iter().copied().filter(|p| p.is_subset(m)).collect();
            assert_eq!(below.family_size, want.len());
            if let Some(v) = below.value {
                assert!(v.is_subset(m));
                assert!(is_ideal(&l, v));
            }
            let above = radical(&l, &i, RadicalVariant::Containing);
            if let Some(v) = above.value {
                assert!(m.is_subset(v));
            }
            if l.is_distributive() {
                // primes separate points, so the containing family cuts out exactly I
                assert_eq!(above.value, Some(m), "{} with I = {}", l.to_text(), l.format_set(m));
            }
        }
    }
}

#[test]
fn gamma_i_matches_its_definition() {
    for l in census(7) {
        for i in enumerate_ideals(&l).into_iter().filter(IdealSet::is_proper) {
            let g = build_gamma_i(&l, &i).unwrap();
            assert!(g.matches_origin(&l));
            let m = i.members();
            let outside = l.elements().difference(m);
            let adj = |x: usize, y: usize| x != y && m.contains(l.meet(x, y));
            let verts: BitSet = outside.iter().filter(|&x| outside.iter().any(|y| adj(x, y))).collect();
            assert_eq!(g.vertex_set(), verts);
            for (u, v) in g.element_edges() {
                assert!(adj(u, v));
            }
            let edges = verts.iter().flat_map(|x| verts.iter().filter(move |&y| y > x && adj(x, y))).count();
            assert_eq!(g.edge_count(), edges);
        }
    }
}

#[test]
fn gamma_zero_is_gamma_minus_bottom() {
    for l in census(8).into_iter().filter(|l| l.len() >= 2) {
        let g = build_gamma(&l);
        let g0 = build_gamma_i(&l, &IdealSet::zero(&l)).unwrap();
        assert_eq!(g0.vertex_set(), g.vertex_set().without(l.bottom()));
        assert!(g.vertex_set().contains(l.bottom()));
        assert!(graphs_isomorphic(&gamma_without_zero(&l), &g0).is_some());
        // Γ ≅ Γ_{0} itself never holds: Γ always has one more vertex
        assert_eq!(evaluate(ClaimId::Gamma0, &l, &IdealSet::zero(&l)).status, Status::Fails);
    }
}

#[test]
fn every_failure_revalidates_from_its_witness() {
    let summary = run_census(&CensusConfig {
        max_size: 7,
        ideal_filter: IdealFilter::All,
        ..CensusConfig::default()
    })
    .unwrap();
    assert!(!summary.counterexamples.is_empty());
    for c in &summary.counterexamples {
        let (l, i, report) = c.replay().unwrap();
        assert_eq!(report.status, Status::Fails);
        assert_eq!(report, c.report);
        assert!(witness_revalidates(&l, &i, &report), "{} on {}", c.claim_id, c.lattice_text);
    }
}

#[test]
fn cut_point_claim_never_fires_on_proper_ideals() {
    // the hypothesis forces the top into I
    for l in census(7) {
        for i in enumerate_ideals(&l).into_iter().filter(IdealSet::is_proper) {
            let r = claims::check(ClaimId::P1_6, &l, &i).unwrap();
            assert_eq!(r.status, Status::Vacuous);
        }
    }
}

#[test]
fn worker_count_does_not_change_the_summary() {
    let base = CensusConfig {
        max_size: 6,
        ..CensusConfig::default()
    };
    let one = run_census(&base).unwrap();
    let four = run_census(&CensusConfig { worker_count: 4, ..base }).unwrap();
    assert_eq!(one.render(), four.render());
    assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
}
