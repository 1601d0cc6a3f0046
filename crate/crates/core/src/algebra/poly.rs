//! Dense univariate polynomials over a [`Ring`].

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::ring::{Field, Rational, Ring};

/// Polynomial stored by ascending degree with no trailing zeros.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::new(vec![R::zero(), R::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x + c`.
    pub fn linear(c: R) -> Self {
        Self::new(vec![c, R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero past the end).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` encodes the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at + c)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &R::from_int(i as i64))
                .collect(),
        )
    }

    /// Substitutes another polynomial for the variable.
    pub fn compose(&self, inner: &Poly<R>) -> Poly<R> {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| acc * inner + &Poly::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }

    /// Multiplicity of the root `0`, `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly<F>) -> (Poly<F>, Poly<F>) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].clone() - &(c.clone() * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly<F>) -> Option<Poly<F>> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().unwrap();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm. Adequate for small degrees; the
    /// rational-function normalization over ℚ uses the integer kernel instead.
    pub fn gcd_euclid(&self, other: &Poly<F>) -> Poly<F> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl Poly<Rational> {
    /// Renders with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*x^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
}

fn add_slices<R: Ring>(a: &[R], b: &[R], negate_b: bool) -> Vec<R> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(R::zero);
            match b.get(i) {
                None => x,
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
            }
        })
        .collect()
}

fn mul_slices<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + &(x.clone() * y);
        }
    }
    out
}

impl<R: Ring> Add<&Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(add_slices(&self.coeffs, &rhs.coeffs, false))
    }
}
impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Poly<R>) -> Poly<R> {
        self + &rhs
    }
}
impl<R: Ring> Sub<&Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(add_slices(&self.coeffs, &rhs.coeffs, true))
    }
}
impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Poly<R>) -> Poly<R> {
        self - &rhs
    }
}
impl<R: Ring> Mul<&Poly<R>> for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        Poly::new(mul_slices(&self.coeffs, &rhs.coeffs))
    }
}
impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Poly<R>) -> Poly<R> {
        self * &rhs
    }
}
impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(R::from_rational(q))
    }
}

/// Exact division in `F[x]`, panicking on a nonzero remainder. Only used
/// where divisibility is a structural guarantee.
impl<F: Field> Div<&Poly<F>> for Poly<F> {
    type Output = Poly<F>;
    fn div(self, rhs: &Poly<F>) -> Poly<F> {
        self.div_exact(rhs).expect("inexact polynomial division")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::q;

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&k| q(k)).collect())
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[]).is_zero());
    }

    #[test]
    fn division_with_remainder() {
        // (x^3 - 1) = (x - 1)(x^2 + x + 1)
        let (quo, rem) = p(&[-1, 0, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(quo, p(&[1, 1, 1]));
        assert!(rem.is_zero());
        let (quo, rem) = p(&[1, 0, 1]).div_rem(&p(&[1, 1]));
        assert_eq!(quo, p(&[-1, 1]));
        assert_eq!(rem, p(&[2]));
    }

    #[test]
    fn gcd_and_compose() {
        let a = p(&[-1, 0, 1]); // x^2 - 1
        let b = p(&[1, 2, 1]); // (x+1)^2
        assert_eq!(a.gcd_euclid(&b), p(&[1, 1]));
        // (x+1)^2 at x -> x - 1 is x^2
        assert_eq!(b.compose(&p(&[-1, 1])), p(&[0, 0, 1]));
    }

    #[test]
    fn render_reads_naturally() {
        assert_eq!(p(&[-1, 0, 3]).render("X"), "3*X^2 - 1");
        assert_eq!(p(&[0, -1]).render("a"), "-a");
    }
}
