//! Unconditional basis constant by exact sign-pattern enumeration.
//!
//! The constant is `K = max_eps || T D_eps T^{-1} ||`, the maximum over sign
//! vectors eps of the l1 operator norm of the sign-flip conjugate. Negating
//! every sign leaves the norm unchanged, so only the 2^(n-1) classes with
//! eps_1 = +1 are visited. Enumeration walks the classes in Gray-code order:
//! a single sign flips between consecutive patterns, which turns each step
//! into a rank-one update of `T D_eps T^{-1}` instead of a fresh product.
//! Contiguous Gray-code ranges go to parallel workers; the reduction is a
//! commutative max with a total-order tie-break, so the result does not
//! depend on the worker count.

use rayon::prelude::*;

use crate::basis::Basis;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Default cap on the dimension for sign enumeration: 2^(n-1) classes.
pub const DEFAULT_SIGN_ENUMERATION_CAP: usize = 24;

/// A vector of signs, one per basis element. The first sign is +1 by
/// convention (global sign classes).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignPattern {
    signs: Vec<i8>,
}

impl SignPattern {
    pub fn all_plus(n: usize) -> Self {
        SignPattern { signs: vec![1; n] }
    }

    /// Signs for a Gray code over positions 2..=n (position 1 fixed +1).
    pub fn from_class_index(index: u64, n: usize) -> Self {
        let gray = index ^ (index >> 1);
        let mut signs = vec![1i8; n];
        for (bit, sign) in signs.iter_mut().enumerate().skip(1) {
            if gray >> (bit - 1) & 1 == 1 {
                *sign = -1;
            }
        }
        SignPattern { signs }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    fn flip(&mut self, i: usize) {
        self.signs[i] = -self.signs[i];
    }

    /// Total order used for witness tie-breaks: +1 sorts before -1, so the
    /// all-plus pattern is the smallest.
    pub fn lex_precedes(&self, other: &SignPattern) -> bool {
        for (a, b) in self.signs.iter().zip(other.signs.iter()) {
            if a != b {
                return *a > *b; // +1 > -1 numerically, but +1 comes first
            }
        }
        false
    }

    /// Applies the signs to a coefficient vector.
    pub fn apply(&self, v: &Vector) -> Vector {
        Vector::new(
            v.iter()
                .zip(self.signs.iter())
                .map(|(c, &s)| if s < 0 { -c } else { c.clone() })
                .collect(),
        )
    }
}

impl std::fmt::Display for SignPattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for &s in &self.signs {
            write!(f, "{}", if s < 0 { '-' } else { '+' })?;
        }
        Ok(())
    }
}

/// The unconditional basis constant and a sign pattern attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnconditionalConstant {
    pub value: Scalar,
    pub witness_signs: SignPattern,
}

/// Number of sign classes visited for dimension n.
pub fn sign_class_count(n: usize) -> u128 {
    1u128 << (n - 1)
}

pub fn unconditional_constant(b: &Basis) -> Result<UnconditionalConstant> {
    unconditional_constant_with_cap(b, DEFAULT_SIGN_ENUMERATION_CAP)
}

pub fn unconditional_constant_with_cap(
    b: &Basis,
    cap: usize,
) -> Result<UnconditionalConstant> {
    let n = b.dimension();
    if n > cap {
        return Err(Error::DimensionTooLarge {
            n,
            cap,
            work: format!("sign enumeration would visit {} classes", sign_class_count(n)),
        });
    }
    let classes: u64 = 1 << (n - 1);

    // worker chunks over contiguous Gray-code ranges
    let workers = rayon::current_num_threads().max(1) as u64;
    let chunk = classes.div_ceil(workers * 4).max(1);
    let starts: Vec<u64> = (0..classes).step_by(chunk as usize).collect();

    let best = starts
        .into_par_iter()
        .map(|start| scan_range(b, start, (start + chunk).min(classes)))
        .reduce_with(pick_best)
        .expect("at least one sign class");

    Ok(UnconditionalConstant {
        value: best.0,
        witness_signs: best.1,
    })
}

fn pick_best(
    a: (Scalar, SignPattern),
    b: (Scalar, SignPattern),
) -> (Scalar, SignPattern) {
    if a.0 > b.0 || (a.0 == b.0 && a.1.lex_precedes(&b.1)) {
        a
    } else {
        b
    }
}

fn scan_range(b: &Basis, lo: u64, hi: u64) -> (Scalar, SignPattern) {
    let n = b.dimension();
    let t = b.matrix();
    let t_inv = b.inverse();

    let mut pattern = SignPattern::from_class_index(lo, n);
    let mut conjugate = signed_conjugate(t, t_inv, &pattern);
    let mut best = (conjugate.operator_norm_l1(), pattern.clone());

    for index in lo + 1..hi {
        // consecutive Gray codes differ in bit trailing_zeros(index),
        // which drives sign position bit+1
        let coord = index.trailing_zeros() as usize + 1;
        let old_sign = pattern.sign(coord);
        rank_one_flip(&mut conjugate, t, t_inv, coord, old_sign);
        pattern.flip(coord);

        let norm = conjugate.operator_norm_l1();
        let candidate = (norm, pattern.clone());
        best = pick_best(best, candidate);
    }
    best
}

/// Builds T D_eps T^{-1} directly.
fn signed_conjugate(t: &Matrix, t_inv: &Matrix, pattern: &SignPattern) -> Matrix {
    let mut signed = t.clone();
    for (j, &s) in pattern.signs().iter().enumerate() {
        if s < 0 {
            signed.scale_column(j, &Scalar::from(-1));
        }
    }
    signed.mul(t_inv)
}

/// Applies the rank-one update for flipping sign j:
/// M <- M - 2 eps_j x_j (row_j of T^{-1}).
fn rank_one_flip(m: &mut Matrix, t: &Matrix, t_inv: &Matrix, j: usize, old_sign: i8) {
    let n = t.dimension();
    let two = Scalar::from(2 * old_sign as i64);
    for i in 0..n {
        let xi = t.at(i, j);
        if xi.is_zero() {
            continue;
        }
        let factor = &two * xi;
        for c in 0..n {
            let r = t_inv.at(j, c);
            if r.is_zero() {
                continue;
            }
            *m.at_mut(i, c) -= &factor * r;
        }
    }
}
