//! Randomized search for normalized bases with a large minimal dominating
//! radius. Nothing beats the ceiling 2; the block family gets arbitrarily
//! close and a negated standard vector attains it outright.
//!
//! ```bash
//! cargo run --example random_search
//! ```

use l1basis::{min_dominating_delta, prop1_block, random_basis, RandomMode, Scalar};

fn main() {
    let two = Scalar::from(2);
    let mut best: Option<(String, Scalar)> = None;
    let mut record = |label: String, delta: Scalar| {
        assert!(delta <= two, "{label} exceeded the universal bound");
        let better = best.as_ref().is_none_or(|(_, cur)| delta > *cur);
        if better {
            println!("new best {delta} from {label}");
            best = Some((label, delta));
        }
    };

    for n in 3..=10 {
        let block = prop1_block(n, true).unwrap();
        record(
            format!("block n={n}"),
            min_dominating_delta(&block.basis).delta_min,
        );
    }
    for trial in 0..60u64 {
        let n = 3 + (trial % 4) as usize;
        let mode = if trial % 3 == 0 {
            RandomMode::SignedPermutation
        } else {
            RandomMode::Dense
        };
        let basis = random_basis(n, trial, &mode).unwrap().normalized();
        record(
            format!("random n={n} seed={trial}"),
            min_dominating_delta(&basis).delta_min,
        );
    }

    let (label, delta) = best.unwrap();
    println!();
    println!("best found: {delta} ({label}); the supremum over all normalized bases is 2");
}
