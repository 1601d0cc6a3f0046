//! Series in ℚ(w)[[x]] whose x^d coefficient has the fixed denominator
//! `g_1(w) ⋯ g_d(w)`.
//!
//! Every series produced by applying 𝕄, D_w, multiplication by x, or
//! multiplication by an element of ℚ[[x]] to the hypergeometric series keeps
//! this shape, so only the numerators ever need to be stored and compared.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::ring::{pow_int, Rational};
use crate::algebra::series::XSeries;
use crate::algebra::zpoly::{QPoly, ZPoly};
use crate::algebra::RatFunc;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LadderKind {
    /// `g_r = (w + r)^n - w^n`
    Difference,
    /// `g_r = (w + r)^n`
    Power,
}

/// The denominator factors `g_1 … g_order` for a fixed `n`.
#[derive(Debug, PartialEq, Eq)]
pub struct Ladder {
    n: u32,
    kind: LadderKind,
    steps: Vec<ZPoly>,
}

impl Ladder {
    pub fn new(n: u32, kind: LadderKind, order: usize) -> Arc<Self> {
        let wn = ZPoly::linear(1, 0).pow(n);
        let steps = (1..=order as i64)
            .map(|r| {
                let p = ZPoly::linear(1, r).pow(n);
                match kind {
                    LadderKind::Difference => p.sub(&wn),
                    LadderKind::Power => p,
                }
            })
            .collect();
        Arc::new(Ladder { n, kind, steps })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn kind(&self) -> LadderKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.steps.len()
    }

    /// `g_r` for `1 <= r <= order`.
    pub fn step(&self, r: usize) -> &ZPoly {
        &self.steps[r - 1]
    }

    /// `g_r(0) = r^n` for both kinds.
    pub fn step_at_zero(&self, r: usize) -> BigInt {
        pow_int(r as i64, self.n)
    }

    /// `g_1 ⋯ g_d`.
    pub fn denominator(&self, d: usize) -> ZPoly {
        self.steps[..d].iter().fold(ZPoly::one(), |acc, g| acc.mul(g))
    }

    pub fn denominator_at_zero(&self, d: usize) -> BigInt {
        (1..=d).fold(BigInt::one(), |acc, r| acc * self.step_at_zero(r))
    }
}

/// `Σ_d N_d(w) / (g_1 ⋯ g_d) · x^d` truncated at the ladder's order.
#[derive(Clone, Debug)]
pub struct LadderSeries {
    ladder: Arc<Ladder>,
    num: Vec<QPoly>,
}

impl PartialEq for LadderSeries {
    fn eq(&self, other: &Self) -> bool {
        self.ladder.kind == other.ladder.kind
            && self.ladder.n == other.ladder.n
            && self.num == other.num
    }
}

impl LadderSeries {
    pub fn new(ladder: Arc<Ladder>, mut num: Vec<QPoly>) -> Self {
        num.resize(ladder.order() + 1, QPoly::zero());
        LadderSeries { ladder, num }
    }

    pub fn zero(ladder: Arc<Ladder>) -> Self {
        Self::new(ladder, Vec::new())
    }

    /// Embeds `c(x) ∈ ℚ[[x]]`: the numerator of `x^d` is `c_d · g_1 ⋯ g_d`.
    pub fn from_qseries(ladder: Arc<Ladder>, c: &XSeries<Rational>) -> Result<Self> {
        check_orders(ladder.order(), c.order())?;
        let mut den = ZPoly::one();
        let mut num = Vec::with_capacity(c.order() + 1);
        for d in 0..=c.order() {
            if d > 0 {
                den = den.mul(ladder.step(d));
            }
            num.push(QPoly::from_zpoly(den.clone()).scale(c.coeff(d)));
        }
        Ok(LadderSeries { ladder, num })
    }

    pub fn ladder(&self) -> &Arc<Ladder> {
        &self.ladder
    }

    pub fn order(&self) -> usize {
        self.num.len() - 1
    }

    pub fn numerator(&self, d: usize) -> &QPoly {
        &self.num[d]
    }

    pub fn numerators(&self) -> &[QPoly] {
        &self.num
    }

    /// Coefficient of `x^d` in canonical form.
    pub fn coeff(&self, d: usize) -> RatFunc {
        RatFunc::new(
            self.num[d].to_poly(),
            self.ladder.denominator(d).to_rational_poly(),
        )
    }

    pub fn to_xseries(&self) -> XSeries<RatFunc> {
        XSeries::from_fn(self.order(), |d| self.coeff(d))
    }

    /// `F(0, x)`.
    pub fn at_w_zero(&self) -> XSeries<Rational> {
        let mut den = BigInt::one();
        XSeries::from_fn(self.order(), |d| {
            if d > 0 {
                den = &den * self.ladder.step_at_zero(d);
            }
            self.num[d].eval_zero() / Rational::from_integer(den.clone())
        })
    }

    /// Constant term 1; holomorphy at `w = 0` holds for every ladder series.
    pub fn is_in_p(&self) -> bool {
        self.num[0] == QPoly::from_zpoly(ZPoly::one())
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        check_orders(self.order(), other.order())?;
        assert!(
            self.ladder.kind == other.ladder.kind && self.ladder.n == other.ladder.n,
            "ladder series over different denominators"
        );
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, QPoly::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.zip(other, QPoly::sub))
    }

    fn zip(&self, other: &Self, f: impl Fn(&QPoly, &QPoly) -> QPoly) -> Self {
        LadderSeries {
            ladder: self.ladder.clone(),
            num: self.num.iter().zip(&other.num).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(QPoly::is_zero)
    }

    /// First x-degree at which two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        self.num
            .iter()
            .zip(&other.num)
            .position(|(a, b)| a != b)
    }

    /// Multiplies by a polynomial in `w`.
    pub fn mul_wpoly(&self, p: &ZPoly) -> Self {
        self.map(|_, c| c.mul_z(p))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|_, a| a.scale(c))
    }

    fn map(&self, f: impl Fn(usize, &QPoly) -> QPoly) -> Self {
        LadderSeries {
            ladder: self.ladder.clone(),
            num: self.num.iter().enumerate().map(|(d, c)| f(d, c)).collect(),
        }
    }

    /// `D_w`: the x^d numerator is multiplied by `w + d`.
    pub fn apply_dw(&self) -> Self {
        self.map(|d, c| c.mul_z(&ZPoly::linear(1, d as i64)))
    }

    /// Multiplication by `x`.
    pub fn shift_x(&self) -> Self {
        let mut num = Vec::with_capacity(self.num.len());
        num.push(QPoly::zero());
        for d in 1..self.num.len() {
            num.push(self.num[d - 1].mul_z(self.ladder.step(d)));
        }
        LadderSeries {
            ladder: self.ladder.clone(),
            num,
        }
    }

    /// Product with `c(x) ∈ ℚ[[x]]`, numerators built by Horner's rule:
    /// `H_d = c_0 N_d + g_d (c_1 N_{d-1} + g_{d-1}(… + g_1 c_d N_0))`.
    pub fn mul_qseries(&self, c: &XSeries<Rational>) -> Result<Self> {
        check_orders(self.order(), c.order())?;
        let c = c.coeffs();
        let num = (0..=self.order())
            .map(|d| {
                let mut acc = self.num[0].scale(&c[d]);
                for m in 1..=d {
                    acc = acc.mul_z(self.ladder.step(m));
                    if !c[d - m].is_zero() {
                        acc = acc.add(&self.num[m].scale(&c[d - m]));
                    }
                }
                acc.reduced()
            })
            .collect();
        Ok(LadderSeries {
            ladder: self.ladder.clone(),
            num,
        })
    }

    /// `𝕄F = w⁻¹ D_w [F / F(0, x)]`.
    pub fn apply_m(&self) -> Result<Self> {
        let base = self.at_w_zero();
        let inv = base.inverse()?;
        let h = self.mul_qseries(&inv)?;
        let mut num = Vec::with_capacity(h.num.len());
        for (d, c) in h.num.iter().enumerate() {
            let lifted = c.mul_z(&ZPoly::linear(1, d as i64));
            let m = lifted.unshift(1).ok_or_else(|| {
                Error::NotInP(format!("F/F(0,x) does not vanish at w = 0 in degree {d}"))
            })?;
            num.push(m);
        }
        Ok(LadderSeries {
            ladder: self.ladder.clone(),
            num,
        })
    }

    /// Adds `delta(w)` to the x^d coefficient.
    pub fn perturb(&self, d: usize, delta: &ZPoly) -> Self {
        let mut out = self.clone();
        if d <= self.order() {
            out.num[d] = out.num[d].add(&QPoly::from_zpoly(delta.mul(&self.ladder.denominator(d))));
        }
        out
    }

    /// Order of vanishing at `w = 0` of the x^d coefficient of `self - other`
    /// (`None` when they agree). Denominators are units at 0, so this is the
    /// valuation of the cross-multiplied numerator difference.
    pub fn difference_valuation(&self, other: &LadderSeries, d: usize) -> Option<usize> {
        let a = self.num[d].mul_z(&other.ladder.denominator(d));
        let b = other.num[d].mul_z(&self.ladder.denominator(d));
        a.sub(&b).valuation()
    }
}

fn check_orders(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::OrderMismatch { left, right })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::q;

    #[test]
    fn difference_ladder_steps() {
        let l = Ladder::new(2, LadderKind::Difference, 2);
        assert_eq!(l.step(1), &ZPoly::from_i64(&[1, 2]));
        assert_eq!(l.step(2), &ZPoly::from_i64(&[4, 4]));
        assert_eq!(l.step_at_zero(2), BigInt::from(4));
    }

    #[test]
    fn qseries_embedding_round_trips() {
        let l = Ladder::new(3, LadderKind::Power, 4);
        let c = XSeries::new(4, vec![q(1), q(2), q(-1), q(0), q(7)]);
        let s = LadderSeries::from_qseries(l, &c).unwrap();
        assert_eq!(s.at_w_zero(), c);
        assert_eq!(s.coeff(4), RatFunc::constant(q(7)));
    }

    #[test]
    fn m_fixes_one() {
        let l = Ladder::new(3, LadderKind::Difference, 5);
        let one = LadderSeries::from_qseries(l, &XSeries::one(5)).unwrap();
        assert_eq!(one.apply_m().unwrap(), one);
    }
}
