//! Dense coordinate vectors and exact p-norm evaluation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::roots::{pow_bounds, root_bounds, sum_bounds, CertifiedValue};
use crate::scalar::Scalar;

/// A point of l1^n: a fixed-dimension coordinate array of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    coords: Vec<Scalar>,
}

impl Vector {
    /// Coordinate vectors have dimension at least 1.
    pub fn new(coords: Vec<Scalar>) -> Self {
        assert!(!coords.is_empty(), "vectors have dimension at least 1");
        Vector { coords }
    }

    pub fn zeros(n: usize) -> Self {
        Vector::new(vec![Scalar::zero(); n])
    }

    /// The standard unit vector e_j (0-based index).
    pub fn standard(n: usize, j: usize) -> Self {
        assert!(j < n);
        let mut v = Vector::zeros(n);
        v.coords[j] = Scalar::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Vector::new(entries.iter().map(|&e| Scalar::from(e)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.coords.iter()
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.iter()
                .zip(other.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.iter()
                .zip(other.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, factor: &Scalar) -> Vector {
        Vector::new(self.iter().map(|a| a * factor).collect())
    }

    pub fn neg(&self) -> Vector {
        self.scale(&Scalar::from(-1))
    }

    /// Dot product against another vector of the same dimension.
    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim());
        self.iter().zip(other.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn l1_norm(&self) -> Scalar {
        self.iter().map(|a| a.abs()).sum()
    }

    pub fn linf_norm(&self) -> Scalar {
        self.iter()
            .map(|a| a.abs())
            .fold(Scalar::zero(), Scalar::max)
    }

    /// Squared Euclidean norm, exact.
    pub fn l2_norm_sq(&self) -> Scalar {
        self.iter().map(|a| a * a).sum()
    }

    /// Sum of |coord|^k for an integer exponent, exact.
    pub fn abs_pow_sum(&self, k: i32) -> Scalar {
        self.iter().map(|a| a.abs().pow(k)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.iter().all(Scalar::is_zero)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A norm exponent: a rational p >= 1, or infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PNorm {
    Finite(Scalar),
    Infinity,
}

impl PNorm {
    pub fn one() -> Self {
        PNorm::Finite(Scalar::one())
    }

    pub fn two() -> Self {
        PNorm::Finite(Scalar::from(2))
    }

    /// Rejects p < 1.
    pub fn finite(p: Scalar) -> Result<Self> {
        if p < Scalar::one() {
            return Err(Error::InvalidParameter(format!(
                "p-norm exponent must satisfy p >= 1, got {p}"
            )));
        }
        Ok(PNorm::Finite(p))
    }
}

impl fmt::Display for PNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PNorm::Finite(p) => write!(f, "{p}"),
            PNorm::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for PNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "∞" {
            return Ok(PNorm::Infinity);
        }
        let p: Scalar = t
            .parse()
            .map_err(|e| Error::InvalidParameter(format!("{e}")))?;
        PNorm::finite(p)
    }
}

/// The value of a p-norm, kept in whatever form is exact.
///
/// For p = 1 and p = infinity the norm itself is rational. For an integer
/// p > 1 the p-th power of the norm is rational and is stored tagged with p,
/// so same-exponent comparisons are exact. For a non-integer rational p the
/// p-th power is bracketed between certified bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormValue {
    Exact {
        value: Scalar,
    },
    Power {
        p: Scalar,
        pow: Scalar,
    },
    Bracket {
        p: Scalar,
        pow_lo: Scalar,
        pow_hi: Scalar,
    },
}

impl NormValue {
    /// Decimal approximation of the norm itself, for display only.
    pub fn decimal(&self, sig: usize) -> String {
        match self {
            NormValue::Exact { value } => value.decimal(sig),
            NormValue::Power { p, pow } => {
                let b = p.to_u32().expect("Power carries an integer exponent");
                root_bounds(pow, b, sig as u32 + 4).decimal(sig)
            }
            NormValue::Bracket { p, pow_lo, .. } => {
                // norm = (pow)^(1/p) = pow^(b/a) for p = a/b
                let a = p.numer().try_into().unwrap_or(u32::MAX);
                let b: u32 = p.denom().try_into().unwrap_or(1);
                pow_bounds(pow_lo, b, a, sig as u32 + 4).decimal(sig)
            }
        }
    }

    /// Exact comparison of the underlying norms when both are exactly
    /// representable (p in {1, integer, infinity}); `None` when a certified
    /// bracket would be needed.
    pub fn le(&self, other: &NormValue) -> Option<bool> {
        let (a_pow, a_p) = self.power_form()?;
        let (b_pow, b_p) = other.power_form()?;
        // a^(1/ap) <= b^(1/bp)  <=>  a^bp <= b^ap
        Some(a_pow.pow(b_p) <= b_pow.pow(a_p))
    }

    fn power_form(&self) -> Option<(Scalar, i32)> {
        match self {
            NormValue::Exact { value } => Some((value.clone(), 1)),
            NormValue::Power { p, pow } => Some((pow.clone(), p.to_u32()? as i32)),
            NormValue::Bracket { .. } => None,
        }
    }
}

/// Evaluates the p-norm of `v` exactly.
///
/// `p = 1` and `p = infinity` give the norm as a scalar; finite `p > 1` gives
/// the exact p-th power tagged with p (integer p) or a certified bracket on
/// the p-th power (non-integer rational p).
pub fn lp_norm(v: &Vector, p: &PNorm) -> Result<NormValue> {
    lp_norm_with_digits(v, p, crate::roots::DEFAULT_BRACKET_DIGITS)
}

/// Same as [`lp_norm`] with explicit bracket precision for non-integer p.
pub fn lp_norm_with_digits(v: &Vector, p: &PNorm, digits: u32) -> Result<NormValue> {
    match p {
        PNorm::Infinity => Ok(NormValue::Exact {
            value: v.linf_norm(),
        }),
        PNorm::Finite(p) => {
            if *p < Scalar::one() {
                return Err(Error::InvalidParameter(format!(
                    "p-norm exponent must satisfy p >= 1, got {p}"
                )));
            }
            if p.is_integer() {
                let k = p.to_u32().ok_or_else(|| {
                    Error::InvalidParameter(format!("exponent {p} too large"))
                })? as i32;
                if k == 1 {
                    Ok(NormValue::Exact { value: v.l1_norm() })
                } else {
                    Ok(NormValue::Power {
                        p: p.clone(),
                        pow: v.abs_pow_sum(k),
                    })
                }
            } else {
                let (a, b) = rational_exponent(p)?;
                let terms: Vec<CertifiedValue> = v
                    .iter()
                    .map(|c| pow_bounds(&c.abs(), a, b, digits))
                    .collect();
                let sum = sum_bounds(&terms);
                Ok(NormValue::Bracket {
                    p: p.clone(),
                    pow_lo: sum.lower().clone(),
                    pow_hi: sum.upper().clone(),
                })
            }
        }
    }
}

/// Splits a positive rational exponent into (numerator, denominator) as u32.
pub(crate) fn rational_exponent(p: &Scalar) -> Result<(u32, u32)> {
    let a: u32 = p
        .numer()
        .try_into()
        .map_err(|_| Error::InvalidParameter(format!("exponent {p} out of range")))?;
    let b: u32 = p
        .denom()
        .try_into()
        .map_err(|_| Error::InvalidParameter(format!("exponent {p} out of range")))?;
    Ok((a, b))
}
