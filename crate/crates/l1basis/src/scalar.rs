//! Exact rational scalars.
//!
//! Every quantity that can be rational in this crate *is* rational: `Scalar`
//! wraps an arbitrary-precision fraction kept in lowest terms with a positive
//! denominator, so arithmetic and comparisons never round. Irrational
//! quantities (square roots, p-th roots) are never materialized as scalars;
//! they are handled by squared comparisons or by the certified brackets in
//! [`crate::roots`].

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use thiserror::Error;

/// Default number of significant digits used when rendering decimals.
pub const DEFAULT_DECIMAL_DIGITS: usize = 12;

/// An exact rational number: lowest terms, positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(BigRational);

impl Scalar {
    /// Builds `numer / denom`. Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_ratio(r: BigRational) -> Self {
        Scalar(r)
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Self {
        Scalar(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Scalar(self.0.recip())
    }

    pub fn pow(&self, exp: i32) -> Self {
        Scalar(self.0.pow(exp))
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// If the value is an integer that fits in `u32`, returns it.
    pub fn to_u32(&self) -> Option<u32> {
        if !self.is_integer() {
            return None;
        }
        use num::ToPrimitive;
        self.0.to_integer().to_u32()
    }

    /// Decimal rendering with `sig` significant digits, round-half-even.
    ///
    /// The exact value is always available through `Display`; this is the
    /// human-readable companion. Plain positional notation is used for
    /// moderate exponents, scientific notation otherwise. Trailing zeros in
    /// the fractional part are trimmed.
    pub fn decimal(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let neg = self.is_negative();
        let p = self.0.numer().abs();
        let q = self.0.denom().clone();

        // e with 10^e <= p/q < 10^(e+1)
        let mut e = p.to_string().len() as i64 - q.to_string().len() as i64;
        loop {
            let ord = cmp_scaled(&p, &q, e);
            if ord == std::cmp::Ordering::Less {
                e -= 1;
                continue;
            }
            if cmp_scaled(&p, &q, e + 1) != std::cmp::Ordering::Less {
                e += 1;
                continue;
            }
            break;
        }

        // round p/q * 10^(sig-1-e) to an integer, half to even
        let shift = sig as i64 - 1 - e;
        let (num, den) = if shift >= 0 {
            (&p * pow10(shift as u64), q.clone())
        } else {
            (p.clone(), &q * pow10((-shift) as u64))
        };
        let mut digits = round_half_even(&num, &den).to_string();
        if digits.len() > sig {
            // rounding carried: 99..9 -> 10..0
            digits.truncate(sig);
            e += 1;
        }
        debug_assert_eq!(digits.len(), sig);

        let body = if (-5..=17).contains(&e) {
            place_point(&digits, e)
        } else {
            let mantissa = place_point(&digits, 0);
            format!("{mantissa}e{e}")
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

fn pow10(k: u64) -> BigInt {
    BigInt::from(10u32).pow(k as u32)
}

/// Compares p/q with 10^e for positive p, q.
fn cmp_scaled(p: &BigInt, q: &BigInt, e: i64) -> std::cmp::Ordering {
    if e >= 0 {
        p.cmp(&(q * pow10(e as u64)))
    } else {
        (p * pow10((-e) as u64)).cmp(q)
    }
}

/// Rounds num/den (both positive) to the nearest integer, ties to even.
fn round_half_even(num: &BigInt, den: &BigInt) -> BigInt {
    let (quot, rem) = num.div_rem(den);
    let twice = &rem * BigInt::from(2);
    match twice.cmp(den) {
        std::cmp::Ordering::Less => quot,
        std::cmp::Ordering::Greater => quot + 1,
        std::cmp::Ordering::Equal => {
            if quot.is_even() {
                quot
            } else {
                quot + 1
            }
        }
    }
}

/// Inserts the decimal point into a digit string whose value is 0.D * 10^(e+1).
fn place_point(digits: &str, e: i64) -> String {
    let len = digits.len() as i64;
    let point = e + 1;
    let s = if point <= 0 {
        let zeros = "0".repeat((-point) as usize);
        format!("0.{zeros}{digits}")
    } else if point >= len {
        let zeros = "0".repeat((point - len) as usize);
        format!("{digits}{zeros}")
    } else {
        let (int, frac) = digits.split_at(point as usize);
        format!("{int}.{frac}")
    };
    // trim trailing zeros in the fractional part
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        t.to_string()
    } else {
        s
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("cannot parse {input:?} as an exact rational: {reason}")]
pub struct ParseScalarError {
    pub input: String,
    pub reason: String,
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p/q`, plain integers, and decimal literals (optionally with a
    /// power-of-ten exponent). Decimals parse to the exact rational they
    /// denote: `0.25` is `1/4`, not a float.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let raw = s.trim();
        let err = |reason: &str| ParseScalarError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if raw.is_empty() {
            return Err(err("empty string"));
        }
        if raw.contains('/') {
            return BigRational::from_str(raw)
                .map(Scalar)
                .map_err(|e| err(&e.to_string()));
        }
        if !raw.contains('.') && !raw.contains(['e', 'E']) {
            return BigInt::from_str(raw)
                .map(|n| Scalar(BigRational::from_integer(n)))
                .map_err(|e| err(&e.to_string()));
        }

        // decimal literal: [sign] digits [. digits] [e [sign] digits]
        let (mantissa, exp) = match raw.split_once(['e', 'E']) {
            Some((m, x)) => {
                let exp: i64 = x.parse().map_err(|_| err("bad exponent"))?;
                (m, exp)
            }
            None => (raw, 0i64),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1i32, rest),
            None => (1i32, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if int_digits.is_empty() && frac_part.is_empty() {
            return Err(err("no digits"));
        }
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(err("invalid digit"));
        }
        let joined = format!("{int_digits}{frac_part}");
        let numer = if joined.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(&joined).map_err(|e| err(&e.to_string()))?
        };
        let scale = frac_part.len() as i64 - exp;
        let value = if scale >= 0 {
            BigRational::new(numer, pow10(scale as u64))
        } else {
            BigRational::from_integer(numer * pow10((-scale) as u64))
        };
        Ok(Scalar(if sign < 0 { -value } else { value }))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from(n as i64)
    }
}

impl From<usize> for Scalar {
    fn from(n: usize) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }
}

macro_rules! binop {
    ($Op:ident, $op:ident, $OpAssign:ident, $op_assign:ident) => {
        impl $Op for Scalar {
            type Output = Scalar;
            fn $op(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$op(rhs.0))
            }
        }
        impl $Op<&Scalar> for Scalar {
            type Output = Scalar;
            fn $op(self, rhs: &Scalar) -> Scalar {
                Scalar((self.0).$op(&rhs.0))
            }
        }
        impl $Op<Scalar> for &Scalar {
            type Output = Scalar;
            fn $op(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$op(rhs.0))
            }
        }
        impl $Op<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $op(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$op(&rhs.0))
            }
        }
        impl $OpAssign<Scalar> for Scalar {
            fn $op_assign(&mut self, rhs: Scalar) {
                (self.0).$op_assign(rhs.0);
            }
        }
        impl $OpAssign<&Scalar> for Scalar {
            fn $op_assign(&mut self, rhs: &Scalar) {
                (self.0).$op_assign(&rhs.0);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);
binop!(Div, div, DivAssign, div_assign);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}
