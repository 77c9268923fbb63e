//! Numeric abstraction shared by the exact and floating evaluation modes.
//!
//! Subcopulas built from sample counts or rational parameters use
//! [`num::BigRational`], so axiom checks and measure comparisons carry no
//! rounding error. Discretized parametric surfaces use `f64` with a small
//! validation tolerance.

use num::bigint::BigInt;
use num::traits::{Signed, ToPrimitive};
use num::BigRational;

/// Scalar type usable as a grid level / subcopula value.
///
/// `Signed` pulls in the full ring operations plus `abs`; comparisons come
/// from `PartialOrd`. Implementations exist for `f64` (floating mode) and
/// [`BigRational`] (exact mode).
pub trait Scalar:
    Clone + PartialOrd + Signed + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static
{
    /// Whether arithmetic on this type is exact.
    const EXACT: bool;

    /// The value `num / den`.
    fn ratio(num: i64, den: i64) -> Self;

    /// Floating approximation, for display and serialization.
    fn to_f64(&self) -> f64;

    /// Default axiom tolerance used by validation: zero in exact mode,
    /// `1e-12` in floating mode.
    fn default_axiom_tol() -> Self;

    fn min_with(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    fn max_with(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn default_axiom_tol() -> Self {
        1e-12
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn default_axiom_tol() -> Self {
        num::zero()
    }
}

/// Parses a decimal or fraction literal into an exact rational.
///
/// Accepts `p/q`, plain integers, decimals (`0.25`, `-1.5`), and scientific
/// notation (`2.5e-3`). Every accepted form converts without rounding.
pub fn parse_exact(text: &str) -> Option<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d == BigInt::from(0) {
            return None;
        }
        return Some(BigRational::new(n, d));
    }

    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }

    let joined = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if joined.is_empty() {
        BigInt::from(0)
    } else {
        joined.parse().ok()?
    };
    if neg {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num::pow::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num::pow::pow(ten, (-scale) as usize))
    };
    Some(value)
}

/// Formats a rational as `p/q` (or `p` when integral).
pub fn format_exact(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
