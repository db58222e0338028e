//! Certified rational brackets for radicals.
//!
//! Quantities like `sqrt(2)` or `x^(3/2)` are never stored as approximate
//! scalars. When an inequality genuinely involves a radical, both sides are
//! bracketed between exact rationals whose correctness follows from integer
//! root extraction: if `s = floor((p q^(b-1) 10^(b d))^(1/b))` then
//! `s/(q 10^d) <= (p/q)^(1/b) < (s+1)/(q 10^d)`.

use num::bigint::BigInt;
use num::One;

use crate::scalar::Scalar;

/// Default bracket precision (decimal digits) for certified comparisons.
pub const DEFAULT_BRACKET_DIGITS: u32 = 40;

/// A nonnegative real known either exactly or between certified bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifiedValue {
    Exact(Scalar),
    Bounds { lo: Scalar, hi: Scalar },
}

impl CertifiedValue {
    pub fn lower(&self) -> &Scalar {
        match self {
            CertifiedValue::Exact(v) => v,
            CertifiedValue::Bounds { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &Scalar {
        match self {
            CertifiedValue::Exact(v) => v,
            CertifiedValue::Bounds { hi, .. } => hi,
        }
    }

    /// `Some(true)` / `Some(false)` when the brackets decide the comparison,
    /// `None` when they overlap.
    pub fn le(&self, other: &CertifiedValue) -> Option<bool> {
        if self.upper() <= other.lower() {
            Some(true)
        } else if self.lower() > other.upper() {
            Some(false)
        } else if let (CertifiedValue::Exact(a), CertifiedValue::Exact(b)) = (self, other) {
            Some(a <= b)
        } else {
            None
        }
    }

    pub fn decimal(&self, sig: usize) -> String {
        self.lower().decimal(sig)
    }
}

/// Certified bounds `lo <= r^(1/b) <= hi` for `r >= 0`, with
/// `hi - lo <= 10^(-digits)`. Exact when `r` is a perfect `b`-th power.
pub fn root_bounds(r: &Scalar, b: u32, digits: u32) -> CertifiedValue {
    assert!(b >= 1, "root order must be at least 1");
    assert!(!r.is_negative(), "root of a negative value");
    if b == 1 || r.is_zero() {
        return CertifiedValue::Exact(r.clone());
    }
    let p = r.numer().clone();
    let q = r.denom().clone();
    let scale = BigInt::from(10u32).pow(digits);
    // n = p * q^(b-1) * scale^b, so n^(1/b) = (p/q)^(1/b) * q * scale
    let n = &p * q.pow(b - 1) * scale.pow(b);
    let s = n.nth_root(b);
    let denom = &q * &scale;
    let lo = Scalar::from_bigints(s.clone(), denom.clone());
    if s.pow(b) == n {
        CertifiedValue::Exact(lo)
    } else {
        let hi = Scalar::from_bigints(s + BigInt::one(), denom);
        CertifiedValue::Bounds { lo, hi }
    }
}

pub fn sqrt_bounds(r: &Scalar, digits: u32) -> CertifiedValue {
    root_bounds(r, 2, digits)
}

/// Certified bounds on `x^(a/b)` for `x >= 0` and positive integers `a`, `b`.
pub fn pow_bounds(x: &Scalar, a: u32, b: u32, digits: u32) -> CertifiedValue {
    assert!(a >= 1 && b >= 1);
    root_bounds(&x.pow(a as i32), b, digits)
}

/// Sum of certified values; exact only when every term is exact.
pub fn sum_bounds<'a, I: IntoIterator<Item = &'a CertifiedValue>>(terms: I) -> CertifiedValue {
    let mut lo = Scalar::zero();
    let mut hi = Scalar::zero();
    let mut exact = true;
    for t in terms {
        lo += t.lower();
        hi += t.upper();
        if !matches!(t, CertifiedValue::Exact(_)) {
            exact = false;
        }
    }
    if exact {
        CertifiedValue::Exact(lo)
    } else {
        CertifiedValue::Bounds { lo, hi }
    }
}

/// Scales a certified value by a nonnegative exact factor.
pub fn scale_bounds(v: &CertifiedValue, factor: &Scalar) -> CertifiedValue {
    assert!(!factor.is_negative());
    match v {
        CertifiedValue::Exact(x) => CertifiedValue::Exact(x * factor),
        CertifiedValue::Bounds { lo, hi } => CertifiedValue::Bounds {
            lo: lo * factor,
            hi: hi * factor,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_brackets() {
        let two = Scalar::from(2);
        let b = sqrt_bounds(&two, 40);
        let (lo, hi) = match &b {
            CertifiedValue::Bounds { lo, hi } => (lo.clone(), hi.clone()),
            _ => panic!("sqrt(2) is irrational"),
        };
        assert!(lo.pow(2) < two && two < hi.pow(2));
        let width = &hi - &lo;
        assert!(width <= Scalar::from_bigints(1.into(), num::BigInt::from(10u32).pow(40)));
    }

    #[test]
    fn perfect_roots_are_exact() {
        assert_eq!(
            sqrt_bounds(&Scalar::from(25), 10),
            CertifiedValue::Exact(Scalar::from(5))
        );
        assert_eq!(
            root_bounds(&Scalar::new(8, 27), 3, 10),
            CertifiedValue::Exact(Scalar::new(2, 3))
        );
        assert_eq!(
            sqrt_bounds(&Scalar::new(9, 4), 5),
            CertifiedValue::Exact(Scalar::new(3, 2))
        );
    }

    #[test]
    fn le_decides_with_enough_digits() {
        let a = sqrt_bounds(&Scalar::from(2), 40);
        let b = sqrt_bounds(&Scalar::from(3), 40);
        assert_eq!(a.le(&b), Some(true));
        assert_eq!(b.le(&a), Some(false));
    }

    #[test]
    fn sum_and_scale_stay_certified() {
        let terms = vec![sqrt_bounds(&Scalar::from(2), 30), sqrt_bounds(&Scalar::from(8), 30)];
        let s = sum_bounds(&terms);
        // sqrt(2) + sqrt(8) = 3 sqrt(2), squared = 18
        assert!(s.lower().pow(2) < Scalar::from(18));
        assert!(s.upper().pow(2) > Scalar::from(18));
        let doubled = scale_bounds(&s, &Scalar::from(2));
        assert!(doubled.lower().pow(2) < Scalar::from(72));
    }
}
