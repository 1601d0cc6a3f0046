//! Truncated power series in `x`.
//!
//! An [`XSeries`] stores the coefficients of `x^0 ..= x^order`. Binary
//! operations require equal orders; [`XSeries::truncate`] is the only way to
//! lower one, and nothing ever extends an order.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::ring::{binomial_rational, q, Field, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct XSeries<R> {
    order: usize,
    coeffs: Vec<R>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl<R: Ring> XSeries<R> {
    /// Pads with zeros or drops coefficients beyond `order`.
    pub fn new(order: usize, mut coeffs: Vec<R>) -> Self {
        coeffs.resize(order + 1, R::zero());
        XSeries { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        XSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![R::one()])
    }

    pub fn constant(order: usize, c: R) -> Self {
        Self::new(order, vec![c])
    }

    /// `c * x^k` (zero if `k > order`).
    pub fn monomial(order: usize, c: R, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_poly(order: usize, p: &Poly<R>) -> Self {
        Self::new(order, p.coeffs().to_vec())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &R {
        &self.coeffs[d]
    }

    pub fn set_coeff(&mut self, d: usize, c: R) {
        self.coeffs[d] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "truncate cannot extend a series");
        XSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> XSeries<S> {
        XSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(XSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(XSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    /// Cauchy product mod `x^(order+1)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + &(a.clone() * b);
            }
        }
        Ok(XSeries { order: n, coeffs: out })
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c)
    }

    /// Multiplies by `x^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        Self::from_fn(self.order, |d| {
            if d >= k {
                self.coeffs[d - k].clone()
            } else {
                R::zero()
            }
        })
    }

    /// `D = x d/dx`: multiplies the coefficient of `x^d` by `d`.
    pub fn apply_d(&self) -> Self {
        Self::from_fn(self.order, |d| self.coeffs[d].clone() * &R::from_int(d as i64))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Evaluates a polynomial at this series (Horner).
    pub fn substitute_into(&self, p: &Poly<R>) -> Self {
        p.coeffs().iter().rev().fold(Self::zero(self.order), |acc, c| {
            acc.mul(self)
                .expect("same order")
                .add(&Self::constant(self.order, c.clone()))
                .expect("same order")
        })
    }

    /// First index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// First degree where two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order.min(other.order);
        (0..=n).find(|&d| self.coeffs[d] != other.coeffs[d])
    }
}

impl<F: Field> XSeries<F> {
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].inv().ok_or(Error::DivisionByNonUnit)?;
        let n = self.order;
        let mut out: Vec<F> = Vec::with_capacity(n + 1);
        out.push(c0.clone());
        for d in 1..=n {
            let mut acc = F::zero();
            for k in 1..=d {
                if !self.coeffs[k].is_zero() {
                    acc = acc + &(self.coeffs[k].clone() * &out[d - k]);
                }
            }
            out.push(-(acc * &c0));
        }
        Ok(XSeries { order: n, coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        self.mul(&other.inverse()?)
    }

    /// Logarithm of a series with constant term 1, via `D log f = Df / f`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("log requires f(0) = 1"));
        }
        let n = self.order;
        let mut g = vec![F::zero(); n + 1];
        for d in 1..=n {
            // d g_d = d f_d - sum_{k=1}^{d-1} k g_k f_{d-k}
            let mut acc = self.coeffs[d].clone() * &F::from_int(d as i64);
            for k in 1..d {
                if !g[k].is_zero() && !self.coeffs[d - k].is_zero() {
                    acc = acc - &(g[k].clone() * &F::from_int(k as i64) * &self.coeffs[d - k]);
                }
            }
            g[d] = acc * &F::from_rational(&q(d as i64).recip());
        }
        Ok(XSeries { order: n, coeffs: g })
    }

    /// Exponential of a series with zero constant term, via `Df = f Dg`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("exp requires g(0) = 0"));
        }
        let n = self.order;
        let mut f = vec![F::zero(); n + 1];
        f[0] = F::one();
        for d in 1..=n {
            let mut acc = F::zero();
            for k in 1..=d {
                if !self.coeffs[k].is_zero() {
                    acc = acc + &(self.coeffs[k].clone() * &F::from_int(k as i64) * &f[d - k]);
                }
            }
            f[d] = acc * &F::from_rational(&q(d as i64).recip());
        }
        Ok(XSeries { order: n, coeffs: f })
    }

    /// Inverse of `D` on series without constant term.
    pub fn d_antiderivative(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("D-antiderivative requires zero constant term"));
        }
        Ok(Self::from_fn(self.order, |d| {
            if d == 0 {
                F::zero()
            } else {
                self.coeffs[d].clone() * &F::from_rational(&q(d as i64).recip())
            }
        }))
    }

    /// Integer power, negative exponents through the inverse.
    pub fn powi(&self, e: i32) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow((-e) as u32))
        }
    }
}

/// Coefficientwise `a op b`.
pub fn series_arith<F: Field>(a: &XSeries<F>, b: &XSeries<F>, op: SeriesOp) -> Result<XSeries<F>> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b),
    }
}

/// `(1 + c x)^alpha` by the generalized binomial series.
pub fn binomial_power<F: Field>(c: &F, alpha: &Rational, order: usize) -> XSeries<F> {
    let mut cpow = F::one();
    XSeries::from_fn(order, |d| {
        let term = F::from_rational(&binomial_rational(alpha, d)) * &cpow;
        cpow = cpow.clone() * c;
        term
    })
}

/// `D_w = D + w` on ℚ(w)[[x]]: multiplies the coefficient of `x^d` by `w + d`.
pub fn apply_dw(f: &XSeries<RatFunc>) -> XSeries<RatFunc> {
    XSeries::from_fn(f.order(), |d| {
        f.coeff(d).clone() * &RatFunc::from_poly(Poly::linear(q(d as i64)))
    })
}

/// Inverse of [`apply_dw`]: divides the coefficient of `x^d` by `w + d`.
pub fn apply_dw_inverse(f: &XSeries<RatFunc>) -> XSeries<RatFunc> {
    XSeries::from_fn(f.order(), |d| {
        f.coeff(d).clone() / &RatFunc::from_poly(Poly::linear(q(d as i64)))
    })
}

/// Embeds a ℚ-series as constants in ℚ(w)[[x]].
pub fn lift_to_ratfunc(f: &XSeries<Rational>) -> XSeries<RatFunc> {
    f.map(|c| RatFunc::constant(c.clone()))
}

/// Sets `w = 0` in every coefficient; `Err(NotInP)` at a pole.
pub fn eval_at_w_zero(f: &XSeries<RatFunc>) -> Result<XSeries<Rational>> {
    let mut out = Vec::with_capacity(f.order() + 1);
    for (d, c) in f.coeffs().iter().enumerate() {
        out.push(
            c.eval(&Rational::zero())
                .ok_or_else(|| Error::NotInP(format!("coefficient of x^{d} has a pole at w = 0")))?,
        );
    }
    Ok(XSeries::new(f.order(), out))
}

/// Membership in 𝒫: constant term 1 and every coefficient holomorphic at 0.
pub fn is_in_p(f: &XSeries<RatFunc>) -> bool {
    f.coeff(0).is_one() && f.coeffs().iter().all(RatFunc::is_holomorphic_at_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::qf;

    fn s(order: usize, c: &[i64]) -> XSeries<Rational> {
        XSeries::new(order, c.iter().map(|&k| q(k)).collect())
    }

    #[test]
    fn geometric_series() {
        let one = XSeries::<Rational>::one(6);
        let g = series_arith(&one, &s(6, &[1, -1]), SeriesOp::Div).unwrap();
        assert!(g.coeffs().iter().all(|c| c.is_one()));
    }

    #[test]
    fn difference_of_squares_and_identity() {
        let a = s(2, &[1, 1]);
        let b = s(2, &[1, -1]);
        assert_eq!(series_arith(&a, &b, SeriesOp::Mul).unwrap(), s(2, &[1, 0, -1]));
        let r = s(4, &[3, -2, 5, 7]);
        assert_eq!(r.mul(&XSeries::one(4)).unwrap(), r);
    }

    #[test]
    fn errors_on_bad_inputs() {
        assert_eq!(s(3, &[0, 1]).inverse(), Err(Error::DivisionByNonUnit));
        assert_eq!(
            s(3, &[1]).add(&s(4, &[1])),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
        assert!(matches!(s(3, &[2, 1]).log(), Err(Error::BadConstantTerm(_))));
        assert!(matches!(s(3, &[1, 1]).exp(), Err(Error::BadConstantTerm(_))));
    }

    #[test]
    fn d_operator_and_log_of_one() {
        assert_eq!(s(3, &[1, 0, 3]).apply_d(), s(3, &[0, 0, 6]));
        assert!(XSeries::<Rational>::one(5).log().unwrap().is_zero());
    }

    #[test]
    fn l_series_for_n3_starts_one_plus_nine_x() {
        // (1 - 27x)^(-1/3): C(-1/3, 1) * (-27) = 9, C(-1/3, 2) * 729 = 2/9 * 729 = 162
        let l = binomial_power(&q(-27), &qf(-1, 3), 2);
        assert_eq!(l.coeffs(), &[q(1), q(9), q(162)]);
    }

    #[test]
    fn dw_on_x() {
        let x = XSeries::new(2, vec![RatFunc::zero(), RatFunc::one()]);
        let got = apply_dw(&x);
        assert_eq!(got.coeff(1), &RatFunc::from_poly(Poly::linear(q(1))));
        assert_eq!(apply_dw_inverse(&got), x);
    }
}
