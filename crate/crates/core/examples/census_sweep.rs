//! Sweep all claims over every lattice up to six elements on four workers.

use zdlattice::census::{run_census, CensusConfig};

fn main() {
    let config = CensusConfig {
        max_size: 6,
        worker_count: 4,
        ..CensusConfig::default()
    };
    let summary = run_census(&config).unwrap();
    print!("{}", summary.render());
}
