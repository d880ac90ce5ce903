//! The generator against brute force over order relations.

mod oracles;

use oracles::compare_generator;
use zdlattice::census::lattices_of_size;

#[test]
fn counts_up_to_six_match_order_matrix_oracle() {
    let counts: Vec<usize> = (1..=6).map(|n| compare_generator(n, &lattices_of_size(n)).unwrap()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 5, 15]);
}

#[test]
fn size_seven_matches_order_matrix_oracle() {
    assert_eq!(compare_generator(7, &lattices_of_size(7)), Ok(53));
}

#[test]
fn distributive_counts() {
    let counts: Vec<usize> = (1..=8)
        .map(|n| lattices_of_size(n).iter().filter(|l| l.is_distributive()).count())
        .collect();
    assert_eq!(counts, [1, 1, 1, 2, 3, 5, 8, 15]);
}

#[test]
fn size_eight_count() {
    assert_eq!(lattices_of_size(8).len(), 222);
}
