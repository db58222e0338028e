//! Build a basis in code and read off everything the library computes for
//! it: optimal equivalence constants with witnesses, dual norms, and the
//! unconditional constant.
//!
//! ```bash
//! cargo run --example analyze_basis
//! ```

use l1basis::{unconditional_constant, Basis, Matrix, Scalar};

fn main() {
    // columns (1, 0) and (1, 1)
    let basis = Basis::new(Matrix::from_int_columns(&[&[1, 0], &[1, 1]]).unwrap()).unwrap();

    let ec = basis.equivalence_constants();
    println!("basis of l1^2 with columns (1,0), (1,1)");
    println!(
        "k1 = {} ({}), attained at coordinate {}",
        ec.k1,
        ec.k1.decimal(12),
        ec.k1_witness + 1
    );
    println!(
        "k2 = {} ({}), attained by vector {}",
        ec.k2,
        ec.k2.decimal(12),
        ec.k2_witness + 1
    );

    // the coefficient sequence that realizes k1
    let alpha = basis.k1_witness_coefficients();
    let image = basis.matrix().mul_vector(&alpha);
    println!(
        "witness coefficients {alpha} give ||sum a_i x_i||_1 = {}",
        image.l1_norm()
    );
    assert_eq!(image.l1_norm(), ec.k1);

    let duals = basis.coefficient_functionals();
    let norms: Vec<String> = duals.norms().iter().map(Scalar::to_string).collect();
    println!("dual norms: {}", norms.join(", "));

    let k = unconditional_constant(&basis).unwrap();
    println!("unconditional constant K = {} at signs {}", k.value, k.witness_signs);
}
