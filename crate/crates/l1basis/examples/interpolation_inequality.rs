//! The norm interpolation chain ||v||_p^p <= ||v||_inf^(p-1) ||v||_1 for
//! finite p > 1: exact for integer p, certified by rational brackets for
//! fractional p, with equality exactly on constant-modulus supports.
//!
//! ```bash
//! cargo run --example interpolation_inequality
//! ```

use l1basis::{interpolation_check, Scalar, Vector};

fn main() {
    let vectors = [
        Vector::from_ints(&[1, 0, 0]),
        Vector::new(vec![Scalar::new(1, 2), Scalar::new(-1, 2), Scalar::zero()]),
        Vector::new(vec![Scalar::one(), Scalar::new(1, 2), Scalar::new(1, 4)]),
        Vector::from_ints(&[3, -2, 1, 0]),
    ];
    let exponents: Vec<Scalar> = ["3/2", "2", "3", "5"]
        .iter()
        .map(|p| p.parse().unwrap())
        .collect();

    for v in &vectors {
        println!("v = {v}");
        for p in &exponents {
            let check = interpolation_check(v, p).unwrap();
            println!(
                "  p = {:<4} ||v||_p^p = {:<16} sup^(p-1) ||v||_1 = {:<16} {}{}",
                p.to_string(),
                check.lhs_value().decimal(10),
                check.rhs.decimal(10),
                if check.holds { "holds" } else { "VIOLATED" },
                if check.equality { " with equality" } else { "" }
            );
            assert!(check.holds);
        }
    }
}
