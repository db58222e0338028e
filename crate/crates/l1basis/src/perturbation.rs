//! Perturbation analysis: uniform l1 distance between systems, the classical
//! small-perturbation criterion, and the quantitative sandwich bounds that a
//! dominated perturbation of a basis inherits.

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Index-wise l1 distances between two systems and their maximum, compared
/// strictly against a given delta.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerturbationReport {
    /// max_j ||x_j - y_j||_1
    pub radius: Scalar,
    pub delta: Scalar,
    /// radius < delta, strictly
    pub dominated: bool,
    pub per_index_distances: Vec<Scalar>,
}

pub fn perturbation_radius(x: &Basis, y: &[Vector], delta: &Scalar) -> Result<PerturbationReport> {
    let xs = x.vectors();
    distances(&xs, y).map(|per_index_distances| {
        let radius = per_index_distances
            .iter()
            .cloned()
            .fold(Scalar::zero(), Scalar::max);
        let dominated = radius < *delta;
        PerturbationReport {
            radius,
            delta: delta.clone(),
            dominated,
            per_index_distances,
        }
    })
}

fn distances(xs: &[Vector], ys: &[Vector]) -> Result<Vec<Scalar>> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch {
            left: xs.len(),
            right: ys.len(),
        });
    }
    let dim = xs[0].dim();
    for v in ys {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: v.dim(),
            });
        }
    }
    Ok(xs
        .iter()
        .zip(ys.iter())
        .map(|(a, b)| a.sub(b).l1_norm())
        .collect())
}

/// The small-perturbation test: sum_j ||x_j*|| * ||x_j - y_j||_1 < 1
/// certifies that the perturbed system is a basis equivalent to the original.
/// The test is sufficient, not necessary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpReport {
    pub sum: Scalar,
    pub passes: bool,
    pub terms: Vec<Scalar>,
}

pub fn bp_criterion(x: &Basis, y: &[Vector]) -> Result<BpReport> {
    let dual_norms = x.coefficient_functionals().norms();
    let dists = distances(&x.vectors(), y)?;
    let terms: Vec<Scalar> = dual_norms
        .iter()
        .zip(dists.iter())
        .map(|(n, d)| n * d)
        .collect();
    let sum: Scalar = terms.iter().sum();
    let passes = sum < Scalar::one();
    Ok(BpReport { sum, passes, terms })
}

/// Two-sided bounds for a dominated perturbation. With k the lower constant
/// of x against the standard basis and m the perturbation radius, m < k
/// forces
///
/// ```text
/// k/(k+m) ||sum a y|| <= ||sum a x|| <= k/(k-m) ||sum a y||
/// ```
///
/// The certificate also carries the exact optimal ratios, which must land
/// inside the predicted interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichCertificate {
    pub k: Scalar,
    pub radius: Scalar,
    pub bound_low: Scalar,
    pub bound_high: Scalar,
    pub actual_low: Scalar,
    pub actual_high: Scalar,
    pub holds: bool,
}

pub fn sandwich_check(x: &Basis, y: &Basis) -> Result<SandwichCertificate> {
    if x.dimension() != y.dimension() {
        return Err(Error::DimensionMismatch {
            expected: x.dimension(),
            found: y.dimension(),
        });
    }
    let k = x.equivalence_constants().k1;
    let radius = perturbation_radius(x, &y.vectors(), &k)?;
    if !radius.dominated {
        return Err(Error::NotApplicable {
            radius: Box::new(radius.radius),
            k: Box::new(k),
        });
    }
    let m = radius.radius;
    let bound_low = &k / &(&k + &m);
    let bound_high = &k / &(&k - &m);
    let (actual_low, actual_high) = relative_equivalence_constants(x, y);
    let holds = bound_low <= actual_low && actual_low <= actual_high && actual_high <= bound_high;
    Ok(SandwichCertificate {
        k,
        radius: m,
        bound_low,
        bound_high,
        actual_low,
        actual_high,
        holds,
    })
}

/// The exact optimal pair (low, high) with
/// `low * ||sum a y|| <= ||sum a x|| <= high * ||sum a y||`:
/// `high = ||T_x T_y^{-1}||` and `low = 1 / ||T_y T_x^{-1}||` as l1 operator
/// norms.
pub fn relative_equivalence_constants(x: &Basis, y: &Basis) -> (Scalar, Scalar) {
    assert_eq!(x.dimension(), y.dimension());
    let high = x.matrix().mul(y.inverse()).operator_norm_l1();
    let low = y.matrix().mul(x.inverse()).operator_norm_l1().recip();
    (low, high)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    #[test]
    fn zero_perturbation() {
        let x = Basis::standard(3);
        let report = perturbation_radius(&x, &x.vectors(), &Scalar::new(1, 2)).unwrap();
        assert_eq!(report.radius, Scalar::zero());
        assert!(report.dominated);
    }

    #[test]
    fn single_perturbed_coordinate() {
        let x = Basis::standard(2);
        let y = vec![
            Vector::new(vec![Scalar::one(), Scalar::new(1, 4)]),
            Vector::new(vec![Scalar::zero(), Scalar::one()]),
        ];
        let report = perturbation_radius(&x, &y, &Scalar::one()).unwrap();
        assert_eq!(report.radius, Scalar::new(1, 4));
        assert_eq!(
            report.per_index_distances,
            vec![Scalar::new(1, 4), Scalar::zero()]
        );
    }

    #[test]
    fn length_mismatch_is_reported() {
        let x = Basis::standard(2);
        let y = vec![Vector::from_ints(&[1, 0])];
        assert!(matches!(
            perturbation_radius(&x, &y, &Scalar::one()),
            Err(Error::LengthMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn bp_zero_for_identical_systems() {
        let x = Basis::standard(3);
        let report = bp_criterion(&x, &x.vectors()).unwrap();
        assert_eq!(report.sum, Scalar::zero());
        assert!(report.passes);
    }

    #[test]
    fn bp_sixth_perturbation_passes() {
        // y_j = x_j + (1/6) u with u a sign-alternating vector of unit l1 norm
        let x = Basis::standard(3);
        let u = Vector::new(vec![Scalar::new(1, 3), Scalar::new(-1, 3), Scalar::new(1, 3)]);
        let shift = u.scale(&Scalar::new(1, 6));
        let y: Vec<Vector> = x.vectors().iter().map(|v| v.add(&shift)).collect();
        let report = bp_criterion(&x, &y).unwrap();
        assert_eq!(report.sum, Scalar::new(1, 2));
        assert!(report.passes);
    }

    #[test]
    fn bp_swap_fails_but_is_still_a_basis() {
        // swapping the two standard vectors moves each by distance 2
        let x = Basis::standard(2);
        let y = vec![Vector::from_ints(&[0, 1]), Vector::from_ints(&[1, 0])];
        let report = bp_criterion(&x, &y).unwrap();
        assert_eq!(report.sum, Scalar::from(4));
        assert!(!report.passes);
        // the criterion is sufficient, not necessary
        assert!(Basis::from_columns(&y).is_ok());
    }

    #[test]
    fn sandwich_trivial_case() {
        let x = Basis::standard(2);
        let cert = sandwich_check(&x, &x).unwrap();
        assert_eq!(cert.bound_low, Scalar::one());
        assert_eq!(cert.bound_high, Scalar::one());
        assert_eq!(cert.actual_low, Scalar::one());
        assert_eq!(cert.actual_high, Scalar::one());
        assert!(cert.holds);
    }

    #[test]
    fn sandwich_quarter_shift() {
        // y_j = x_j + (1/4) e_1 against the standard 2-dimensional basis
        let x = Basis::standard(2);
        let shift = Vector::new(vec![Scalar::new(1, 4), Scalar::zero()]);
        let cols: Vec<Vector> = x.vectors().iter().map(|v| v.add(&shift)).collect();
        let y = Basis::from_columns(&cols).unwrap();
        let cert = sandwich_check(&x, &y).unwrap();
        assert_eq!(cert.radius, Scalar::new(1, 4));
        assert_eq!(cert.bound_low, Scalar::new(4, 5));
        assert_eq!(cert.bound_high, Scalar::new(4, 3));
        assert_eq!(cert.actual_low, Scalar::new(4, 5));
        assert_eq!(cert.actual_high, Scalar::new(6, 5));
        assert!(cert.holds);
    }

    #[test]
    fn sandwich_rejects_large_radius() {
        let x = Basis::standard(2);
        // distance 2 swap: radius 2 >= k = 1
        let y = Basis::new(Matrix::from_int_columns(&[&[0, 1], &[1, 0]]).unwrap()).unwrap();
        assert!(matches!(
            sandwich_check(&x, &y),
            Err(Error::NotApplicable { .. })
        ));
    }
}
