//! Perturb a basis strictly inside its lower constant and compare the
//! predicted two-sided bounds k/(k+m), k/(k-m) with the exact optimal
//! ratios between the two systems.
//!
//! ```bash
//! cargo run --example perturbation_sandwich
//! ```

use l1basis::{sandwich_check, Basis, Scalar, Vector};

fn main() {
    let x = Basis::standard(2);

    // shift both vectors by m * e_1 for a few radii m < k = 1
    for m in ["1/8", "1/4", "1/2", "3/4"] {
        let m: Scalar = m.parse().unwrap();
        let shift = Vector::new(vec![m.clone(), Scalar::zero()]);
        let columns: Vec<Vector> = x.vectors().iter().map(|v| v.add(&shift)).collect();
        let y = Basis::from_columns(&columns).unwrap();

        let cert = sandwich_check(&x, &y).unwrap();
        println!(
            "m = {:<4} bounds [{}, {}]  actual [{}, {}]  holds: {}",
            cert.radius.to_string(),
            cert.bound_low,
            cert.bound_high,
            cert.actual_low,
            cert.actual_high,
            cert.holds
        );
    }

    // at m >= k the bounds make no claim at all
    let swap = Basis::from_columns(&[Vector::from_ints(&[0, 1]), Vector::from_ints(&[1, 0])])
        .unwrap();
    match sandwich_check(&x, &swap) {
        Err(e) => println!("swap perturbation: {e}"),
        Ok(_) => unreachable!("radius 2 exceeds k = 1"),
    }
}
