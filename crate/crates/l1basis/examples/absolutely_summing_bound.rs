//! The Khintchine-type lower bound: with C the unconditional constant of a
//! basis in l1,
//!
//! ```text
//! ||sum a_i x_i||_1 >= (1 / (C sqrt 2)) * sum |a_i| ||x_i||_2
//! ```
//!
//! The radical side is never evaluated in floating point: both sides are
//! squared and the sum of square roots is capped by certified 40-digit
//! rational upper bounds before the exact comparison.
//!
//! ```bash
//! cargo run --example absolutely_summing_bound
//! ```

use l1basis::{fact2_check, random_basis, RandomMode, Scalar};
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..8 {
        let n = 3 + trial % 3;
        let basis = random_basis(n, 100 + trial as u64, &RandomMode::Dense).unwrap();
        let alphas: Vec<Scalar> = (0..n)
            .map(|_| Scalar::new(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
            .collect();
        let cert = fact2_check(&basis, &alphas).unwrap();
        println!(
            "n = {n}: C = {:<10} 2 C^2 lhs^2 = {:<12} rhs^2 <= {:<12} holds: {}",
            cert.unconditional.decimal(5),
            cert.lhs_sq_scaled.decimal(6),
            cert.rhs.upper().pow(2).decimal(6),
            cert.holds
        );
        assert!(cert.holds);
    }
}
