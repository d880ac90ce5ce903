//! Every claim checker on every distinguished fixture ideal.

use zdlattice::claims::{check, builtin_fixtures, ClaimId};

fn main() {
    for fixture in builtin_fixtures() {
        let l = &fixture.lattice;
        for (name, ideal) in &fixture.distinguished_ideals {
            println!("{} with I = {name} {}", fixture.name, l.format_set(ideal.members()));
            for claim in ClaimId::ALL {
                match check(claim, l, ideal) {
                    Ok(r) => println!("  {}", r.line(l)),
                    Err(e) => println!("  {claim} not applicable: {e}"),
                }
            }
        }
    }
}
