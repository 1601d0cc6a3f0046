//! Coefficient traits shared by polynomials, series and linear algebra.
//!
//! Every ring used in this crate is a commutative ℚ-algebra, so the traits
//! carry an embedding of the rationals alongside the usual operators.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A commutative ℚ-algebra with value and by-reference operators.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_int(k: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(k)))
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> + for<'a> Div<&'a Self, Output = Self> {
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self)
        }
    }
}

impl Ring for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Field for Rational {}

/// Shorthand for an integer-valued rational.
pub fn q(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Shorthand for `num/den`.
pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical "p/q" rendering (integers print without a denominator).
pub fn rational_string(x: &Rational) -> String {
    x.to_string()
}

/// Parses "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().ok()?;
            let den: BigInt = b.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Binomial coefficient `C(alpha, k)` for rational `alpha`.
pub fn binomial_rational(alpha: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (alpha - q(i as i64)) / q(i as i64 + 1);
    }
    acc
}

/// Integer binomial coefficient `C(m, k)` with the convention that it is zero
/// when `k < 0` or `k > m >= 0`.
pub fn binomial(m: i64, k: i64) -> BigInt {
    if k < 0 || (m >= 0 && k > m) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(m - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow_int(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

pub fn abs_rational(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let x = qf(-6, 8);
        assert_eq!(rational_string(&x), "-3/4");
        assert_eq!(parse_rational("-3/4"), Some(x));
        assert_eq!(parse_rational("7"), Some(q(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(rational_string(&q(0)), "0");
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::zero());
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial_rational(&qf(-1, 3), 2), qf(2, 9));
    }
}
