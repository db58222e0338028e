//! Bases of l1^n, their coefficient functionals, and the optimal equivalence
//! constants to the standard unit vector basis.
//!
//! For a basis {x_1, ..., x_n} with coefficient functionals {x_j*},
//!
//! ```text
//! k1 * sum |a_i|  <=  || sum a_i x_i ||_1  <=  k2 * sum |a_i|
//! ```
//!
//! holds with `k2 = max_j ||x_j||_1` and `k1^{-1} = max_i sum_j |x_j*(i)|`,
//! and both constants are attained: k2 at a single basis vector, k1 at the
//! normalized preimage of a signed unit vector. The computed constants are
//! therefore exact optima, and witnesses are recorded.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Default cap on the dimension accepted for exact inversion. Rational entry
/// growth makes very large exact inversions expensive; raise explicitly when
/// needed.
pub const DEFAULT_DIMENSION_CAP: usize = 64;

/// An ordered basis of l1^n: n linearly independent vectors, stored as the
/// columns of an invertible matrix. Invertibility is checked at construction
/// and the exact inverse is kept alongside.
#[derive(Clone, PartialEq, Eq)]
pub struct Basis {
    matrix: Matrix,
    inverse: Matrix,
}

impl Basis {
    pub fn new(matrix: Matrix) -> Result<Basis> {
        Basis::with_cap(matrix, DEFAULT_DIMENSION_CAP)
    }

    pub fn with_cap(matrix: Matrix, cap: usize) -> Result<Basis> {
        let n = matrix.dimension();
        if n > cap {
            return Err(Error::DimensionTooLarge {
                n,
                cap,
                work: format!("exact inversion costs about {n}^3 rational operations"),
            });
        }
        let inverse = matrix.invert()?;
        Ok(Basis { matrix, inverse })
    }

    pub fn from_columns(columns: &[Vector]) -> Result<Basis> {
        Basis::new(Matrix::from_columns(columns)?)
    }

    /// The standard unit vector basis: the identity matrix.
    pub fn standard(n: usize) -> Basis {
        let id = Matrix::identity(n);
        Basis {
            matrix: id.clone(),
            inverse: id,
        }
    }

    /// Assembles a basis from a matrix and its already-known exact inverse.
    /// Used for block-diagonal constructions where inverting the assembled
    /// matrix would redo blockwise work; the caller guarantees the pair.
    pub(crate) fn from_parts(matrix: Matrix, inverse: Matrix) -> Basis {
        debug_assert!(matrix.dimension() > 12 || matrix.mul(&inverse).is_identity());
        Basis { matrix, inverse }
    }

    pub fn dimension(&self) -> usize {
        self.matrix.dimension()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// The exact inverse of the basis matrix; row j holds the coefficient
    /// functional x_j* in coordinates.
    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }

    pub fn vector(&self, j: usize) -> Vector {
        self.matrix.column(j)
    }

    pub fn vectors(&self) -> Vec<Vector> {
        self.matrix.columns()
    }

    /// True when every basis vector has l1 norm exactly 1.
    pub fn is_normalized(&self) -> bool {
        (0..self.dimension()).all(|j| self.vector(j).l1_norm() == Scalar::one())
    }

    /// Rescales every basis vector to unit l1 norm. The inverse is adjusted
    /// exactly (row j scales by the old norm), so no re-inversion happens.
    pub fn normalized(&self) -> Basis {
        let mut matrix = self.matrix.clone();
        let mut inverse = self.inverse.clone();
        for j in 0..self.dimension() {
            let norm = self.vector(j).l1_norm();
            // columns are nonzero in an invertible matrix
            matrix.scale_column(j, &norm.recip());
            inverse.scale_row(j, &norm);
        }
        Basis { matrix, inverse }
    }

    pub fn coefficient_functionals(&self) -> DualSystem {
        let functionals = (0..self.dimension())
            .map(|j| self.inverse.row(j))
            .collect();
        DualSystem { functionals }
    }

    pub fn equivalence_constants(&self) -> EquivalenceConstants {
        let n = self.dimension();
        let mut k2 = Scalar::zero();
        let mut k2_witness = 0;
        for j in 0..n {
            let norm = self.vector(j).l1_norm();
            if norm > k2 {
                k2 = norm;
                k2_witness = j;
            }
        }
        let (inv_norm, k1_witness) = self.inverse.operator_norm_l1_with_witness();
        EquivalenceConstants {
            k1: inv_norm.recip(),
            k2,
            k1_witness,
            k2_witness,
        }
    }

    /// The coefficient sequence attaining the lower constant: the preimage of
    /// the witness signed unit vector, rescaled to unit l1 norm. Evaluating
    /// `|| sum a_i x_i ||_1` at this sequence gives exactly k1.
    pub fn k1_witness_coefficients(&self) -> Vector {
        let ec = self.equivalence_constants();
        let alpha = self
            .inverse
            .mul_vector(&Vector::standard(self.dimension(), ec.k1_witness));
        let norm = alpha.l1_norm();
        alpha.scale(&norm.recip())
    }
}

impl std::fmt::Debug for Basis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Basis of l1^{}\n{}", self.dimension(), self.matrix)
    }
}

/// The coefficient functionals of a basis: row j of the inverse matrix is
/// x_j* in coordinates, and x_j*(x_i) = delta_ij exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSystem {
    functionals: Vec<Vector>,
}

impl DualSystem {
    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    pub fn functional(&self, j: usize) -> &Vector {
        &self.functionals[j]
    }

    pub fn functionals(&self) -> &[Vector] {
        &self.functionals
    }

    /// Applies x_j* to a vector.
    pub fn apply(&self, j: usize, v: &Vector) -> Scalar {
        self.functionals[j].dot(v)
    }

    /// The dual norms ||x_j*||. A full basis spans all of l1^n, so each
    /// functional norm is the sup norm of its coordinate row.
    pub fn norms(&self) -> Vec<Scalar> {
        self.functionals.iter().map(Vector::linf_norm).collect()
    }
}

/// Optimal constants of equivalence to the standard unit vector basis,
/// with the indices attaining them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceConstants {
    pub k1: Scalar,
    pub k2: Scalar,
    /// Coordinate index i* with sum_j |x_j*(i*)| = 1/k1; the minimizing
    /// coefficient sequence is the normalized preimage of e_{i*}.
    pub k1_witness: usize,
    /// Basis index j* with ||x_{j*}||_1 = k2.
    pub k2_witness: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_basis_constants_are_one() {
        let b = Basis::standard(4);
        let ec = b.equivalence_constants();
        assert_eq!(ec.k1, Scalar::one());
        assert_eq!(ec.k2, Scalar::one());
        assert!(b.is_normalized());
    }

    #[test]
    fn shear_basis_constants() {
        let b = Basis::new(Matrix::from_int_columns(&[&[1, 0], &[1, 1]]).unwrap()).unwrap();
        let ec = b.equivalence_constants();
        assert_eq!(ec.k1, Scalar::new(1, 2));
        assert_eq!(ec.k2, Scalar::from(2));
        assert_eq!(ec.k2_witness, 1);
        // the witness coefficients really achieve k1
        let alpha = b.k1_witness_coefficients();
        assert_eq!(alpha.l1_norm(), Scalar::one());
        let image = b.matrix().mul_vector(&alpha);
        assert_eq!(image.l1_norm(), ec.k1);
    }

    #[test]
    fn functionals_are_biorthogonal() {
        let b = Basis::new(Matrix::from_int_columns(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]).unwrap())
            .unwrap();
        let duals = b.coefficient_functionals();
        for j in 0..3 {
            for i in 0..3 {
                let want = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(duals.apply(j, &b.vector(i)), want);
            }
        }
    }

    #[test]
    fn identity_dual_norms_are_one() {
        let duals = Basis::standard(3).coefficient_functionals();
        assert_eq!(duals.norms(), vec![Scalar::one(); 3]);
    }

    #[test]
    fn normalized_rescales_columns_exactly() {
        let b = Basis::new(Matrix::from_int_columns(&[&[1, 0], &[1, 1]]).unwrap()).unwrap();
        let nb = b.normalized();
        assert!(nb.is_normalized());
        assert!(nb.matrix().mul(nb.inverse()).is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        match Basis::with_cap(Matrix::identity(5), 4) {
            Err(Error::DimensionTooLarge { n, cap, .. }) => {
                assert_eq!((n, cap), (5, 4));
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }
}
