//! Scalar abstraction for the numeric side of the crate.
//!
//! The combinatorial solvers are integer-only. Ratio bounds, enumeration
//! limits and recurrence inequalities are written once against [`Scalar`]
//! and can be evaluated in `f32`, `f64` or exact rationals.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio, Rational64};
use num_traits::{Num, Signed, ToPrimitive};

pub trait Scalar: Num + Signed + Clone + PartialOrd + Debug + Send + Sync {
    /// Arithmetic in this type carries no rounding error.
    const EXACT: bool;

    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn to_f64_lossy(&self) -> f64;

    fn from_count(k: usize) -> Self {
        Self::from_ratio(k as i64, 1)
    }

    /// `self^exp` for a possibly negative exponent; `self` must be non-zero
    /// when `exp < 0`.
    fn powi(&self, exp: i32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * self.clone();
        }
        if exp < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }

    /// Parses `"p/q"`, an integer, or a plain decimal such as `"1.40202"`.
    /// Decimals are converted through an exact `numer / 10^digits` ratio.
    fn parse_decimal(text: &str) -> Option<Self> {
        let (numer, denom) = parse_ratio_parts(text.trim())?;
        if denom == 0 {
            return None;
        }
        Some(Self::from_ratio(numer, denom))
    }
}

fn parse_ratio_parts(text: &str) -> Option<(i64, i64)> {
    if let Some((p, q)) = text.split_once('/') {
        return Some((p.trim().parse().ok()?, q.trim().parse().ok()?));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: i64 = digits.parse().ok()?;
    let denom = 10_i64.checked_pow(frac_part.len() as u32)?;
    Some((if negative { -numer } else { numer }, denom))
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }

    fn to_f64_lossy(&self) -> f64 {
        *self
    }

    fn powi(&self, exp: i32) -> Self {
        f64::powi(*self, exp)
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        (numer as f64 / denom as f64) as f32
    }

    fn to_f64_lossy(&self) -> f64 {
        f64::from(*self)
    }

    fn powi(&self, exp: i32) -> Self {
        f32::powi(*self, exp)
    }
}

impl Scalar for Rational64 {
    const EXACT: bool = true;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

/// Largest `k` with `k <= c * n`, evaluated in the scalar's own arithmetic.
pub fn floor_times<T: Scalar>(c: &T, n: usize) -> usize {
    let bound = c.clone() * T::from_count(n);
    (0..=n).take_while(|&k| T::from_count(k) <= bound).last().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimals_exactly() {
        let alpha = Rational64::parse_decimal("1.40202").unwrap();
        assert_eq!(alpha, Ratio::new(140202, 100000));
        assert_eq!(Rational64::parse_decimal("1/6"), Some(Ratio::new(1, 6)));
        assert_eq!(Rational64::parse_decimal("2"), Some(Ratio::from_integer(2)));
        assert_eq!(Rational64::parse_decimal("-.5"), Some(Ratio::new(-1, 2)));
        assert!(Rational64::parse_decimal("1/0").is_none());
        assert!(Rational64::parse_decimal("abc").is_none());
        assert!(Rational64::parse_decimal(".").is_none());
    }

    #[test]
    fn negative_powers() {
        let two = BigRational::from_count(2);
        assert_eq!(two.powi(-3), BigRational::from_ratio(1, 8));
        assert_eq!(Scalar::powi(&2.0_f64, -3), 0.125);
    }

    #[test]
    fn floor_times_is_exact_for_rationals() {
        assert_eq!(floor_times(&Rational64::new(1, 6), 18), 3);
        assert_eq!(floor_times(&Rational64::new(1, 6), 17), 2);
        assert_eq!(floor_times(&Rational64::new(1, 3), 10), 3);
        assert_eq!(floor_times(&Rational64::new(1, 6), 0), 0);
    }
}
