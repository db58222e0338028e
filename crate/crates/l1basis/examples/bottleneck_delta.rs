//! How far can a normalized basis sit from the standard one? Reindexing is
//! free, so the honest distance is the bottleneck assignment value over the
//! exact distance matrix d[i][j] = ||x_j - e_i||_1. The normalized block
//! family realizes 2(n-1)/n, which climbs to the universal ceiling 2.
//!
//! ```bash
//! cargo run --example bottleneck_delta
//! ```

use l1basis::{min_dominating_delta, prop1_block, random_basis, RandomMode, Scalar};

fn main() {
    println!("normalized blocks:");
    println!("{:>4} {:>10} {:>14}", "n", "delta_min", "2(n-1)/n");
    for n in 3..=12 {
        let block = prop1_block(n, true).unwrap();
        let result = min_dominating_delta(&block.basis);
        let formula = Scalar::new(2 * (n as i64 - 1), n as i64);
        assert_eq!(result.delta_min, formula);
        println!(
            "{:>4} {:>10} {:>14}",
            n,
            result.delta_min.to_string(),
            formula.to_string()
        );
    }

    // a permuted standard basis needs no perturbation at all once reindexed
    let perm = random_basis(6, 3, &RandomMode::SignedPermutation).unwrap();
    let result = min_dominating_delta(&perm);
    let index_wise = (0..6)
        .map(|i| result.distance_matrix[i][i].clone())
        .fold(Scalar::zero(), Scalar::max);
    println!();
    println!(
        "signed permutation: index-wise radius {} vs delta_min {} after reassignment",
        index_wise, result.delta_min
    );
    assert!(result.delta_min <= Scalar::from(2));
}
