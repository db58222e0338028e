//! The classical small-perturbation test: when
//! sum_j ||x_j*|| ||x_j - y_j||_1 < 1, the perturbed system is again a basis
//! equivalent to the original. The test is sufficient but not necessary:
//! swapping two standard vectors fails it yet clearly stays a basis.
//!
//! ```bash
//! cargo run --example small_perturbation_criterion
//! ```

use l1basis::{bp_criterion, relative_equivalence_constants, Basis, Scalar, Vector};

fn main() {
    let x = Basis::standard(3);

    // a passing perturbation: every vector moves by 1/6
    let u = Vector::new(vec![
        Scalar::new(1, 3),
        Scalar::new(-1, 3),
        Scalar::new(1, 3),
    ]);
    let shift = u.scale(&Scalar::new(1, 6));
    let y: Vec<Vector> = x.vectors().iter().map(|v| v.add(&shift)).collect();
    let report = bp_criterion(&x, &y).unwrap();
    println!(
        "uniform 1/6 shift: sum = {} -> {}",
        report.sum,
        if report.passes { "passes" } else { "fails" }
    );
    let yb = Basis::from_columns(&y).unwrap();
    let (low, high) = relative_equivalence_constants(&x, &yb);
    println!("  certified equivalent, exact constants ({low}, {high})");

    // a failing perturbation that is still a basis
    let swapped = vec![Vector::from_ints(&[0, 1, 0]), Vector::from_ints(&[1, 0, 0]), Vector::from_ints(&[0, 0, 1])];
    let report = bp_criterion(&x, &swapped).unwrap();
    println!(
        "swap of two vectors: sum = {} -> {}",
        report.sum,
        if report.passes { "passes" } else { "fails" }
    );
    println!(
        "  still a basis: {}",
        Basis::from_columns(&swapped).is_ok()
    );
}
