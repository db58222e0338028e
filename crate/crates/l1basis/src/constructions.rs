//! Basis constructions and inequality certificates.
//!
//! The block family built here consists, for each n >= 3, of
//!
//! ```text
//! x_1 = (1/n, ..., 1/n),    x_i = e_1 + e_i  (2 <= i <= n)
//! ```
//!
//! whose coefficient functionals have the closed forms
//!
//! ```text
//! x_1* = -n/(n-2) e_1 + sum_{i>=2} n/(n-2) e_i
//! x_j* = 1/(n-2) e_1 + (n-3)/(n-2) e_j - sum_{i not in {1,j}} 1/(n-2) e_i
//! ```
//!
//! The family has k2 = 2 and k1 = 1/5 at n = 3, k1 = (n-2)/(3n-5) for larger
//! n, while the sup norm of the first vector is 1/n: equivalence constants
//! stay bounded even though the vectors flatten out in l-infinity. Direct
//! sums of blocks push the flattening witness to zero without moving the
//! constants.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::roots::{
    pow_bounds, scale_bounds, sqrt_bounds, sum_bounds, CertifiedValue, DEFAULT_BRACKET_DIGITS,
};
use crate::scalar::Scalar;
use crate::unconditional::{
    unconditional_constant_with_cap, UnconditionalConstant, DEFAULT_SIGN_ENUMERATION_CAP,
};
use crate::vector::{lp_norm_with_digits, rational_exponent, NormValue, PNorm, Vector};

/// One block of the flattening family.
#[derive(Clone, Debug)]
pub struct Prop1Block {
    pub n: usize,
    pub basis: Basis,
    pub normalized: bool,
}

/// Closed-form coefficient functionals of the unnormalized block.
pub fn prop1_functionals(n: usize) -> Result<Vec<Vector>> {
    check_block_size(n)?;
    let d = Scalar::from(n as i64 - 2);
    let mut rows = Vec::with_capacity(n);
    // x_1*
    let mut first = vec![&Scalar::from(n as i64) / &d; n];
    first[0] = -&first[0];
    rows.push(Vector::new(first));
    // x_j*, j >= 2
    for j in 1..n {
        let mut row = vec![-&(&Scalar::one() / &d); n];
        row[0] = &Scalar::one() / &d;
        row[j] = &Scalar::from(n as i64 - 3) / &d;
        rows.push(Vector::new(row));
    }
    Ok(rows)
}

/// The equivalence constants (k1, k2) of the unnormalized block.
pub fn prop1_expected_constants(n: usize) -> (Scalar, Scalar) {
    let k1 = if n == 3 {
        Scalar::new(1, 5)
    } else {
        Scalar::new(n as i64 - 2, 3 * n as i64 - 5)
    };
    (k1, Scalar::from(2))
}

fn check_block_size(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "block construction needs n > 2, got {n}"
        )));
    }
    Ok(())
}

/// Builds the block of dimension n, verifying the construction against its
/// closed forms before returning it.
pub fn prop1_block(n: usize, normalized: bool) -> Result<Prop1Block> {
    check_block_size(n)?;
    let over_n = Scalar::new(1, n as i64);
    let mut columns = Vec::with_capacity(n);
    columns.push(Vector::new(vec![over_n.clone(); n]));
    for i in 1..n {
        let mut c = Vector::standard(n, i);
        c = c.add(&Vector::standard(n, 0));
        columns.push(c);
    }
    let basis = Basis::with_cap(Matrix::from_columns(&columns)?, n.max(64))?;

    // construction self-checks: closed-form functionals, flat first vector,
    // expected constants
    let duals = basis.coefficient_functionals();
    let closed = prop1_functionals(n)?;
    for (j, want) in closed.iter().enumerate() {
        assert_eq!(
            duals.functional(j),
            want,
            "functional {j} deviates from its closed form at n = {n}"
        );
    }
    assert_eq!(basis.vector(0).linf_norm(), over_n);
    let ec = basis.equivalence_constants();
    let (k1, k2) = prop1_expected_constants(n);
    assert_eq!((ec.k1, ec.k2), (k1, k2));

    let basis = if normalized { basis.normalized() } else { basis };
    Ok(Prop1Block {
        n,
        basis,
        normalized,
    })
}

/// A finite direct sum of blocks: a block-diagonal basis of l1^(sum n_i).
#[derive(Clone, Debug)]
pub struct Prop1DirectSum {
    pub basis: Basis,
    pub block_sizes: Vec<usize>,
    /// min over blocks of the first vector's sup norm: 1/max(n_i). Grows
    /// blocks to push this witness toward zero.
    pub sup_norm_witness: Scalar,
    /// blockwise extremes of the equivalence constants
    pub k1: Scalar,
    pub k2: Scalar,
}

pub fn prop1_direct_sum(block_sizes: &[usize]) -> Result<Prop1DirectSum> {
    if block_sizes.is_empty() {
        return Err(Error::InvalidParameter("no block sizes given".into()));
    }
    for &s in block_sizes {
        check_block_size(s)?;
    }
    let total: usize = block_sizes.iter().sum();
    let mut matrix = Matrix::zeros(total);
    let mut inverse = Matrix::zeros(total);
    let mut k1 = Scalar::one();
    let mut k2 = Scalar::zero();
    let mut offset = 0;
    for &size in block_sizes {
        let block = prop1_block(size, false)?;
        for i in 0..size {
            for j in 0..size {
                *matrix.at_mut(offset + i, offset + j) = block.basis.matrix().at(i, j).clone();
                *inverse.at_mut(offset + i, offset + j) = block.basis.inverse().at(i, j).clone();
            }
        }
        let (bk1, bk2) = prop1_expected_constants(size);
        k1 = k1.min(bk1);
        k2 = k2.max(bk2);
        offset += size;
    }
    let max_block = *block_sizes.iter().max().expect("nonempty");
    Ok(Prop1DirectSum {
        basis: Basis::from_parts(matrix, inverse),
        block_sizes: block_sizes.to_vec(),
        sup_norm_witness: Scalar::new(1, max_block as i64),
        k1,
        k2,
    })
}

/// Certificate that a normalized basis with unconditional constant K and
/// Euclidean norms bounded below satisfies the predicted lower equivalence
/// constant: `k1 >= inf ||x_j||_2 / (K sqrt(2))`, checked as
/// `k1^2 >= inf ||x_j||_2^2 / (2 K^2)` so sqrt(2) never appears.
#[derive(Clone, Debug)]
pub struct Thm2Certificate {
    pub unconditional: UnconditionalConstant,
    /// min_j ||x_j||_2^2, exact
    pub inf_l2_sq: Scalar,
    /// inf ||x_j||_2^2 / (2 K^2): the square of the predicted lower constant
    pub k_sq_scaled: Scalar,
    pub k1_actual: Scalar,
    /// for a normalized basis the upper constant is exactly 1
    pub upper_side_unit: bool,
    pub holds: bool,
}

pub fn thm2_check(b: &Basis) -> Result<Thm2Certificate> {
    thm2_check_with_cap(b, DEFAULT_SIGN_ENUMERATION_CAP)
}

pub fn thm2_check_with_cap(b: &Basis, cap: usize) -> Result<Thm2Certificate> {
    for (index, v) in b.vectors().iter().enumerate() {
        let norm = v.l1_norm();
        if norm != Scalar::one() {
            return Err(Error::NotNormalized { index, norm });
        }
    }
    let unconditional = unconditional_constant_with_cap(b, cap)?;
    let inf_l2_sq = b
        .vectors()
        .iter()
        .map(Vector::l2_norm_sq)
        .reduce(Scalar::min)
        .expect("basis is nonempty");
    let k_sq_scaled = &inf_l2_sq / &(Scalar::from(2) * unconditional.value.pow(2));
    let ec = b.equivalence_constants();
    let upper_side_unit = ec.k2 == Scalar::one();
    let holds = ec.k1.pow(2) >= k_sq_scaled && upper_side_unit;
    Ok(Thm2Certificate {
        unconditional,
        inf_l2_sq,
        k_sq_scaled,
        k1_actual: ec.k1,
        upper_side_unit,
        holds,
    })
}

/// Certificate for the absolutely-summing lower bound
/// `||sum a_i x_i||_1 >= (1/(C sqrt(2))) sum |a_i| ||x_i||_2`,
/// verified as `2 C^2 ||sum a_i x_i||_1^2 >= (sum |a_i| ||x_i||_2)^2` with
/// the radical sum replaced by a certified upper bound.
#[derive(Clone, Debug)]
pub struct Fact2Certificate {
    pub unconditional: Scalar,
    pub lhs_norm: Scalar,
    /// 2 C^2 ||sum a_i x_i||_1^2, exact
    pub lhs_sq_scaled: Scalar,
    /// certified bracket on sum |a_i| ||x_i||_2
    pub rhs: CertifiedValue,
    pub holds: bool,
}

pub fn fact2_check(b: &Basis, alphas: &[Scalar]) -> Result<Fact2Certificate> {
    fact2_check_with(b, alphas, DEFAULT_BRACKET_DIGITS, DEFAULT_SIGN_ENUMERATION_CAP)
}

pub fn fact2_check_with(
    b: &Basis,
    alphas: &[Scalar],
    digits: u32,
    cap: usize,
) -> Result<Fact2Certificate> {
    let n = b.dimension();
    if alphas.len() > n {
        return Err(Error::LengthMismatch {
            left: n,
            right: alphas.len(),
        });
    }
    let mut coeffs = alphas.to_vec();
    coeffs.resize(n, Scalar::zero());

    let c = unconditional_constant_with_cap(b, cap)?.value;
    let combo = b.matrix().mul_vector(&Vector::new(coeffs.clone()));
    let lhs_norm = combo.l1_norm();
    let lhs_sq_scaled = Scalar::from(2) * c.pow(2) * lhs_norm.pow(2);

    let terms: Vec<CertifiedValue> = coeffs
        .iter()
        .zip(b.vectors().iter())
        .map(|(a, x)| sqrt_bounds(&(a.pow(2) * x.l2_norm_sq()), digits))
        .collect();
    let rhs = sum_bounds(&terms);
    let holds = lhs_sq_scaled >= rhs.upper().pow(2);
    Ok(Fact2Certificate {
        unconditional: c,
        lhs_norm,
        lhs_sq_scaled,
        rhs,
        holds,
    })
}

/// Both sides of the norm interpolation inequality
/// `||v||_p^p <= ||v||_inf^(p-1) ||v||_1` for finite rational p > 1.
///
/// Equality holds exactly when every nonzero coordinate has the same
/// modulus; otherwise some term is strictly smaller and the certified
/// comparison separates at a finite precision.
#[derive(Clone, Debug)]
pub struct InterpolationCheck {
    /// ||v||_p^p, exact for integer p, bracketed otherwise
    pub lhs: NormValue,
    /// ||v||_inf^(p-1) * ||v||_1
    pub rhs: CertifiedValue,
    pub holds: bool,
    pub equality: bool,
}

impl InterpolationCheck {
    /// The left side ||v||_p^p on the same scale as `rhs`.
    pub fn lhs_value(&self) -> CertifiedValue {
        match &self.lhs {
            NormValue::Exact { value } => CertifiedValue::Exact(value.clone()),
            NormValue::Power { pow, .. } => CertifiedValue::Exact(pow.clone()),
            NormValue::Bracket { pow_lo, pow_hi, .. } => CertifiedValue::Bounds {
                lo: pow_lo.clone(),
                hi: pow_hi.clone(),
            },
        }
    }
}

pub fn interpolation_check(v: &Vector, p: &Scalar) -> Result<InterpolationCheck> {
    if *p <= Scalar::one() {
        return Err(Error::InvalidParameter(format!(
            "interpolation exponent must satisfy p > 1, got {p}"
        )));
    }
    let sup = v.linf_norm();
    let l1 = v.l1_norm();
    let equality = v
        .iter()
        .all(|c| c.is_zero() || c.abs() == sup);

    if p.is_integer() {
        let lhs = lp_norm_with_digits(v, &PNorm::Finite(p.clone()), DEFAULT_BRACKET_DIGITS)?;
        let k = p.to_u32().ok_or_else(|| {
            Error::InvalidParameter(format!("exponent {p} too large"))
        })? as i32;
        let rhs_value = sup.pow(k - 1) * l1;
        let holds = match &lhs {
            NormValue::Power { pow, .. } => *pow <= rhs_value,
            NormValue::Exact { value } => *value <= rhs_value,
            NormValue::Bracket { .. } => unreachable!("integer p is exact"),
        };
        debug_assert!(!equality || !holds || matches!(&lhs, NormValue::Power { pow, .. } if *pow == rhs_value));
        return Ok(InterpolationCheck {
            lhs,
            rhs: CertifiedValue::Exact(rhs_value),
            holds,
            equality,
        });
    }

    let (a, b) = rational_exponent(p)?;
    let mut digits = DEFAULT_BRACKET_DIGITS;
    loop {
        let lhs = lp_norm_with_digits(v, &PNorm::Finite(p.clone()), digits)?;
        let lhs_cert = match &lhs {
            NormValue::Bracket { pow_lo, pow_hi, .. } => CertifiedValue::Bounds {
                lo: pow_lo.clone(),
                hi: pow_hi.clone(),
            },
            _ => unreachable!("non-integer p brackets"),
        };
        // rhs = (sup^(a-b))^(1/b) * ||v||_1 since p - 1 = (a-b)/b
        let rhs = scale_bounds(&pow_bounds(&sup, a - b, b, digits), &l1);
        match lhs_cert.le(&rhs) {
            Some(decided) => {
                return Ok(InterpolationCheck {
                    lhs,
                    rhs,
                    holds: decided,
                    equality,
                })
            }
            None if equality => {
                // both sides are the same product of a rational and
                // sup^(p-1); the brackets can never separate
                return Ok(InterpolationCheck {
                    lhs,
                    rhs,
                    holds: true,
                    equality,
                });
            }
            None => {
                digits *= 2;
                assert!(
                    digits <= 64 * DEFAULT_BRACKET_DIGITS,
                    "bracket refinement failed to separate strictly distinct sides"
                );
            }
        }
    }
}

/// Deterministic pseudo-random bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RandomMode {
    /// identity columns plus rational perturbations of l1 norm strictly
    /// below the radius
    NearStandard { radius: Scalar },
    /// entries drawn from a bounded rational grid, singular draws rejected
    Dense,
    /// signed permutation matrices: exact l1 isometries
    SignedPermutation,
}

const MAX_GENERATION_ATTEMPTS: usize = 100;

pub fn random_basis(n: usize, seed: u64, mode: &RandomMode) -> Result<Basis> {
    if n == 0 {
        return Err(Error::InvalidParameter("dimension must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match mode {
        RandomMode::Dense => {
            for _ in 0..MAX_GENERATION_ATTEMPTS {
                let mut m = Matrix::zeros(n);
                for i in 0..n {
                    for j in 0..n {
                        *m.at_mut(i, j) =
                            Scalar::new(rng.gen_range(-8..=8), rng.gen_range(1..=4));
                    }
                }
                match Basis::new(m) {
                    Ok(b) => return Ok(b),
                    Err(Error::SingularMatrix { .. }) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(Error::GenerationFailed {
                attempts: MAX_GENERATION_ATTEMPTS,
            })
        }
        RandomMode::NearStandard { radius } => {
            if !radius.is_positive() {
                return Err(Error::InvalidParameter(format!(
                    "perturbation radius must be positive, got {radius}"
                )));
            }
            for _ in 0..MAX_GENERATION_ATTEMPTS {
                let mut columns = Vec::with_capacity(n);
                for j in 0..n {
                    let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
                    let steps = rng.gen_range(0..=7i64);
                    let raw_vec = Vector::from_ints(&raw);
                    let e_j = Vector::standard(n, j);
                    if steps == 0 || raw_vec.is_zero() {
                        columns.push(e_j);
                        continue;
                    }
                    // exact column distance radius * steps/8 < radius
                    let target = radius * &Scalar::new(steps, 8);
                    let shift = raw_vec.scale(&(&target / &raw_vec.l1_norm()));
                    columns.push(e_j.add(&shift));
                }
                match Basis::from_columns(&columns) {
                    Ok(b) => return Ok(b),
                    Err(Error::SingularMatrix { .. }) => continue,
                    Err(e) => return Err(e),
                }
            }
            Err(Error::GenerationFailed {
                attempts: MAX_GENERATION_ATTEMPTS,
            })
        }
        RandomMode::SignedPermutation => {
            let mut targets: Vec<usize> = (0..n).collect();
            targets.shuffle(&mut rng);
            let columns: Vec<Vector> = targets
                .iter()
                .map(|&i| {
                    let e = Vector::standard(n, i);
                    if rng.gen_bool(0.5) {
                        e.neg()
                    } else {
                        e
                    }
                })
                .collect();
            Basis::from_columns(&columns)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perturbation::perturbation_radius;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn block_three_matches_hand_values() {
        let block = prop1_block(3, false).unwrap();
        assert_eq!(
            block.basis.vector(0),
            Vector::new(vec![s("1/3"), s("1/3"), s("1/3")])
        );
        assert_eq!(block.basis.vector(1), Vector::from_ints(&[1, 1, 0]));
        assert_eq!(block.basis.vector(2), Vector::from_ints(&[1, 0, 1]));
        let ec = block.basis.equivalence_constants();
        assert_eq!((ec.k1, ec.k2), (s("1/5"), s("2")));
        let duals = block.basis.coefficient_functionals();
        assert_eq!(duals.functional(0), &Vector::from_ints(&[-3, 3, 3]));
        assert_eq!(duals.functional(1), &Vector::from_ints(&[1, 0, -1]));
        assert_eq!(duals.functional(2), &Vector::from_ints(&[1, -1, 0]));
        assert_eq!(duals.norms(), vec![s("3"), s("1"), s("1")]);
    }

    #[test]
    fn block_four_constants() {
        let block = prop1_block(4, false).unwrap();
        let ec = block.basis.equivalence_constants();
        assert_eq!((ec.k1, ec.k2), (s("2/7"), s("2")));
        // first dual row carries the largest entry n/(n-2)
        let duals = block.basis.coefficient_functionals();
        assert_eq!(duals.norms()[0], s("2"));
    }

    #[test]
    fn normalized_block_three() {
        let block = prop1_block(3, true).unwrap();
        assert!(block.basis.is_normalized());
        assert_eq!(
            block.basis.vector(1),
            Vector::new(vec![s("1/2"), s("1/2"), s("0")])
        );
        // index-wise distance to the standard basis: max(4/3, 1, 1)
        let report = perturbation_radius(
            &Basis::standard(3),
            &block.basis.vectors(),
            &Scalar::from(2),
        )
        .unwrap();
        assert_eq!(report.radius, s("4/3"));
        assert_eq!(report.per_index_distances, vec![s("4/3"), s("1"), s("1")]);
    }

    #[test]
    fn rejects_tiny_blocks() {
        assert!(prop1_block(2, false).is_err());
    }

    #[test]
    fn direct_sum_combines_blockwise() {
        let sum = prop1_direct_sum(&[3, 4, 5]).unwrap();
        assert_eq!(sum.basis.dimension(), 12);
        assert_eq!(sum.sup_norm_witness, s("1/5"));
        assert_eq!((sum.k1.clone(), sum.k2.clone()), (s("1/5"), s("2")));
        // cross-check the blockwise constants on the assembled matrix
        let ec = sum.basis.equivalence_constants();
        assert_eq!((ec.k1, ec.k2), (sum.k1, sum.k2));
    }

    #[test]
    fn single_block_sum_is_the_block() {
        let sum = prop1_direct_sum(&[3]).unwrap();
        let block = prop1_block(3, false).unwrap();
        assert_eq!(sum.basis.matrix(), block.basis.matrix());
        assert_eq!(sum.sup_norm_witness, s("1/3"));
    }

    #[test]
    fn thm2_standard_basis_has_slack() {
        let cert = thm2_check(&Basis::standard(3)).unwrap();
        assert_eq!(cert.unconditional.value, Scalar::one());
        assert_eq!(cert.inf_l2_sq, Scalar::one());
        assert_eq!(cert.k_sq_scaled, s("1/2"));
        assert_eq!(cert.k1_actual, Scalar::one());
        assert!(cert.holds);
    }

    #[test]
    fn thm2_requires_normalization() {
        let block = prop1_block(3, false).unwrap();
        assert!(matches!(
            thm2_check(&block.basis),
            Err(Error::NotNormalized { index: 1, .. })
        ));
    }

    #[test]
    fn thm2_on_normalized_block() {
        let block = prop1_block(3, true).unwrap();
        let cert = thm2_check(&block.basis).unwrap();
        assert_eq!(cert.unconditional.value, s("7"));
        assert_eq!(cert.k1_actual, s("1/7"));
        assert!(cert.holds);
    }

    #[test]
    fn fact2_standard_cases() {
        let b = Basis::standard(2);
        let cert = fact2_check(&b, &[Scalar::one()]).unwrap();
        assert_eq!(cert.lhs_sq_scaled, s("2"));
        assert_eq!(cert.rhs, CertifiedValue::Exact(Scalar::one()));
        assert!(cert.holds);

        let cert = fact2_check(&b, &[Scalar::one(), Scalar::one()]).unwrap();
        assert_eq!(cert.lhs_sq_scaled, s("8"));
        assert_eq!(cert.rhs, CertifiedValue::Exact(s("2")));
        assert!(cert.holds);
    }

    #[test]
    fn fact2_rejects_too_many_coefficients() {
        let b = Basis::standard(2);
        assert!(matches!(
            fact2_check(&b, &[s("1"), s("1"), s("1")]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn interpolation_hand_values() {
        // equality on a unit vector
        let check = interpolation_check(&Vector::from_ints(&[1, 0]), &s("2")).unwrap();
        assert!(check.holds && check.equality);

        // equality on a constant-modulus vector
        let v = Vector::new(vec![s("1/2"), s("-1/2")]);
        let check = interpolation_check(&v, &s("2")).unwrap();
        assert!(check.holds && check.equality);
        assert_eq!(check.rhs, CertifiedValue::Exact(s("1/2")));

        // strict case: (1, 1/2, 1/4) at p = 2: 21/16 <= 28/16
        let v = Vector::new(vec![s("1"), s("1/2"), s("1/4")]);
        let check = interpolation_check(&v, &s("2")).unwrap();
        assert!(check.holds && !check.equality);
        match check.lhs {
            NormValue::Power { pow, .. } => assert_eq!(pow, s("21/16")),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(check.rhs, CertifiedValue::Exact(s("7/4")));
    }

    #[test]
    fn interpolation_non_integer_exponent() {
        let v = Vector::new(vec![s("1"), s("1/2"), s("1/4")]);
        let check = interpolation_check(&v, &s("3/2")).unwrap();
        assert!(check.holds && !check.equality);

        let constant = Vector::new(vec![s("2/3"), s("-2/3")]);
        let check = interpolation_check(&constant, &s("3/2")).unwrap();
        assert!(check.holds && check.equality);
    }

    #[test]
    fn interpolation_rejects_small_p() {
        assert!(interpolation_check(&Vector::from_ints(&[1]), &s("1")).is_err());
        assert!(interpolation_check(&Vector::from_ints(&[1]), &s("1/2")).is_err());
    }

    #[test]
    fn random_bases_are_deterministic() {
        for mode in [
            RandomMode::Dense,
            RandomMode::SignedPermutation,
            RandomMode::NearStandard { radius: s("1/4") },
        ] {
            let a = random_basis(5, 7, &mode).unwrap();
            let b = random_basis(5, 7, &mode).unwrap();
            assert_eq!(a.matrix(), b.matrix());
        }
    }

    #[test]
    fn signed_permutations_are_isometries() {
        for seed in 0..5 {
            let b = random_basis(6, seed, &RandomMode::SignedPermutation).unwrap();
            let ec = b.equivalence_constants();
            assert_eq!((ec.k1, ec.k2), (Scalar::one(), Scalar::one()));
            let k = crate::unconditional::unconditional_constant(&b).unwrap();
            assert_eq!(k.value, Scalar::one());
        }
    }

    #[test]
    fn near_standard_respects_radius() {
        let radius = s("1/4");
        for seed in 0..10 {
            let b = random_basis(
                4,
                seed,
                &RandomMode::NearStandard {
                    radius: radius.clone(),
                },
            )
            .unwrap();
            let report =
                perturbation_radius(&Basis::standard(4), &b.vectors(), &radius).unwrap();
            assert!(report.dominated, "seed {seed}: radius {}", report.radius);
        }
    }
}
