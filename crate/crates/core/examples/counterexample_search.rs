//! Smallest counterexample (if any) for each claim up to five elements.

use zdlattice::census::search_counterexample;
use zdlattice::claims::ClaimId;

fn main() {
    for claim in ClaimId::ALL {
        match search_counterexample(claim, 5).unwrap() {
            None => println!("{:<16} none up to 5 elements", claim.as_str()),
            Some((l, i, report)) => {
                let w = report.witness.as_ref().map(|w| w.render(&l)).unwrap_or_default();
                println!("{:<16} {}-element lattice, I = {}: {w}", claim.as_str(), l.len(), l.format_set(i.members()));
                for line in l.to_text().lines() {
                    println!("{:18}{line}", "");
                }
            }
        }
    }
}
