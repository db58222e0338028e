//! A normalized basis whose vectors keep some Euclidean mass admits an
//! explicit lower equivalence constant: k1 >= inf ||x_j||_2 / (K sqrt 2).
//! The certificate compares squares, so sqrt 2 never materializes.
//!
//! ```bash
//! cargo run --example lower_constant_certificate
//! ```

use l1basis::{prop1_block, random_basis, thm2_check, Basis, RandomMode};

fn main() {
    let cases: Vec<(String, Basis)> = std::iter::once(("standard n=4".to_string(), Basis::standard(4)))
        .chain((3..=6).map(|n| {
            (
                format!("normalized block n={n}"),
                prop1_block(n, true).unwrap().basis,
            )
        }))
        .chain((0..4).map(|seed| {
            (
                format!("random normalized n=5 seed={seed}"),
                random_basis(5, seed, &RandomMode::Dense).unwrap().normalized(),
            )
        }))
        .collect();

    for (label, basis) in cases {
        let cert = thm2_check(&basis).unwrap();
        println!(
            "{label:<32} K = {:<6} inf ||x||_2^2 = {:<8} k1 = {:<8} holds: {}",
            cert.unconditional.value.to_string(),
            cert.inf_l2_sq.to_string(),
            cert.k1_actual.to_string(),
            cert.holds
        );
        assert!(cert.holds);
    }
}
