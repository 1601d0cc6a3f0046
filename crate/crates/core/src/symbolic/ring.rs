//! ℚ(a)[Λ, Λ⁻¹, X] with the derivation `D(Λ) = Λ(X-1)/a`, `D(X) = X² - X`.
//!
//! `a` stands for `n`, Λ for `L` and `X` for `Lⁿ`; the relation `X = Λ^a` is
//! never imposed.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::ring::{q, rational_string, Rational};
use crate::algebra::{Poly, RatFunc};
use crate::asymptotics::LPoly;

/// `Σ c_{i,j}(a) Λ^i X^j`, keyed by `(i, j)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymElem {
    terms: BTreeMap<(i64, u32), RatFunc>,
}

/// The formal `a` as an element of ℚ(a).
pub fn a() -> RatFunc {
    RatFunc::var()
}

/// The constant rational function `c`.
pub fn rc(c: Rational) -> RatFunc {
    RatFunc::constant(c)
}

impl SymElem {
    pub fn zero() -> Self {
        SymElem::default()
    }

    pub fn monomial(c: RatFunc, lambda: i64, x: u32) -> Self {
        let mut e = SymElem::zero();
        e.add_term(lambda, x, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((i64, u32), RatFunc)>) -> Self {
        let mut e = SymElem::zero();
        for ((i, j), c) in terms {
            e.add_term(i, j, c);
        }
        e
    }

    /// `Λ^lambda · c(X)` for a polynomial `c` in X over ℚ(a).
    pub fn from_x_poly(c: &Poly<RatFunc>, lambda: i64) -> Self {
        Self::from_terms(
            c.coeffs()
                .iter()
                .enumerate()
                .map(|(j, v)| ((lambda, j as u32), v.clone())),
        )
    }

    pub fn add_term(&mut self, lambda: i64, x: u32, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let key = (lambda, x);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(i64, u32), RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, lambda: i64, x: u32) -> RatFunc {
        self.terms.get(&(lambda, x)).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &SymElem) -> SymElem {
        let mut out = self.clone();
        for ((i, j), c) in &other.terms {
            out.add_term(*i, *j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymElem) -> SymElem {
        self.add(&other.scale(&rc(q(-1))))
    }

    pub fn mul(&self, other: &SymElem) -> SymElem {
        let mut out = SymElem::zero();
        for ((i, j), c) in &self.terms {
            for ((k, l), d) in &other.terms {
                out.add_term(i + k, j + l, c.clone() * d);
            }
        }
        out
    }

    pub fn scale(&self, c: &RatFunc) -> SymElem {
        if c.is_zero() {
            return SymElem::zero();
        }
        SymElem {
            terms: self.terms.iter().map(|(k, v)| (*k, v.clone() * c)).collect(),
        }
    }

    /// Multiplies by `Λ^k`.
    pub fn shift(&self, k: i64) -> SymElem {
        SymElem {
            terms: self.terms.iter().map(|((i, j), v)| ((i + k, *j), v.clone())).collect(),
        }
    }

    /// `D(Λ^i X^j) = (X-1)(i/a + j) Λ^i X^j`.
    pub fn d(&self) -> SymElem {
        let mut out = SymElem::zero();
        for ((i, j), c) in &self.terms {
            let f = c.clone() * &(rc(q(*i)) / &a() + &rc(q(*j as i64)));
            out.add_term(*i, j + 1, f.clone());
            out.add_term(*i, *j, -f);
        }
        out
    }

    /// Value at `x = 0` (`Λ = X = 1`).
    pub fn at_one(&self) -> RatFunc {
        self.terms.values().fold(RatFunc::zero(), |acc, c| acc + c)
    }

    /// `a -> n`, `Λ -> L`, `X -> Lⁿ`; `None` if a coefficient has a pole at `n`.
    pub fn specialize(&self, n: u32) -> Option<LPoly> {
        let at = q(n as i64);
        let mut out = LPoly::zero();
        for ((i, j), c) in &self.terms {
            out.add_term(i + n as i64 * *j as i64, c.eval(&at)?);
        }
        Some(out)
    }

    /// Exact quotient by `X - 1` (per power of Λ), or `None`.
    pub fn div_by_x_minus_one(&self) -> Option<SymElem> {
        let mut by_lambda: BTreeMap<i64, BTreeMap<u32, RatFunc>> = BTreeMap::new();
        for ((i, j), c) in &self.terms {
            by_lambda.entry(*i).or_default().insert(*j, c.clone());
        }
        let mut out = SymElem::zero();
        for (i, poly) in by_lambda {
            let top = *poly.keys().next_back().unwrap();
            // synthetic division from the top: p = (X-1) t, t_{j-1} = p_j + t_j
            let mut carry = RatFunc::zero();
            for j in (1..=top).rev() {
                carry = carry + &poly.get(&j).cloned().unwrap_or_else(RatFunc::zero);
                out.add_term(i, j - 1, carry.clone());
            }
            if !(carry + &poly.get(&0).cloned().unwrap_or_else(RatFunc::zero)).is_zero() {
                return None;
            }
        }
        Some(out)
    }

    /// Distinct denominators of the coefficients.
    pub fn denominators(&self) -> Vec<Poly<Rational>> {
        let mut out: Vec<Poly<Rational>> = Vec::new();
        for c in self.terms.values() {
            if !out.contains(c.denom()) {
                out.push(c.denom().clone());
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((i, j), c)| {
                let mut mono = Vec::new();
                if *i != 0 {
                    mono.push(format!("Λ^{i}"));
                }
                if *j != 0 {
                    mono.push(format!("X^{j}"));
                }
                let c = format!("({})", c.render("a"));
                if mono.is_empty() {
                    c
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// One exported term: exponents and the coefficient as numerator and
/// denominator polynomials in `a` (coefficient lists, lowest degree first).
#[derive(Clone, Debug, Serialize)]
pub struct SymTerm {
    pub lambda_exp: i64,
    pub x_exp: u32,
    pub coeff_num: Vec<String>,
    pub coeff_den: Vec<String>,
}

impl SymElem {
    pub fn export_terms(&self) -> Vec<SymTerm> {
        let poly = |p: &Poly<Rational>| p.coeffs().iter().map(rational_string).collect();
        self.terms
            .iter()
            .map(|((i, j), c)| SymTerm {
                lambda_exp: *i,
                x_exp: *j,
                coeff_num: poly(c.numer()),
                coeff_den: poly(c.denom()),
            })
            .collect()
    }
}

/// True when `p` is a nonzero constant times a power of the variable.
pub fn is_monomial(p: &Poly<Rational>) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
}

/// `C(a - c, t)` as a polynomial in `a`: the falling factorial over `t!`.
pub fn binomial_shifted(c: i64, t: usize) -> Poly<Rational> {
    let mut p = Poly::constant(Rational::one());
    for u in 0..t as i64 {
        p = p * Poly::linear(q(-c - u));
    }
    let fact: Rational = (1..=t as i64).map(q).fold(Rational::one(), |acc, k| acc * k);
    p.scale(&fact.recip())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_of_lambda_specializes_to_d_of_l() {
        let n = 4;
        let lam = SymElem::monomial(RatFunc::one(), 1, 0);
        let l = LPoly::monomial(q(1), 1);
        assert_eq!(lam.d().specialize(n).unwrap(), l.d(n));
    }

    #[test]
    fn x_minus_one_division() {
        let e = SymElem::from_terms([((2, 3), rc(q(1))), ((2, 0), rc(q(-1)))]);
        let t = e.div_by_x_minus_one().unwrap();
        assert_eq!(t.mul(&SymElem::from_terms([((0, 1), rc(q(1))), ((0, 0), rc(q(-1)))])), e);
        assert!(SymElem::monomial(rc(q(1)), 0, 1).div_by_x_minus_one().is_none());
    }

    #[test]
    fn shifted_binomial_values() {
        let p = binomial_shifted(2, 3);
        for n in 0..10i64 {
            let expected = crate::algebra::ring::binomial(n - 2, 3);
            assert_eq!(p.eval(&q(n)), Rational::from_integer(expected));
        }
    }
}
