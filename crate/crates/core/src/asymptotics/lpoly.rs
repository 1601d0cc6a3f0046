//! Laurent polynomials in the symbol `L = (1 - nⁿx)^{-1/n}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::ring::{q, Rational};
use crate::algebra::series::XSeries;
use crate::algebra::Poly;
use crate::error::Result;
use crate::mirror::l_series;

/// `Σ c_r L^r` with finitely many nonzero `c_r`, `r ∈ ℤ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(q(1), 0)
    }

    pub fn monomial(c: Rational, r: i64) -> Self {
        let mut p = LPoly::zero();
        p.add_term(r, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = LPoly::zero();
        for (r, c) in terms {
            p.add_term(r, c);
        }
        p
    }

    /// `c(L^n)` for a polynomial `c(X)`.
    pub fn from_x_poly(c: &Poly<Rational>, n: u32) -> Self {
        Self::from_terms(
            c.coeffs()
                .iter()
                .enumerate()
                .map(|(i, a)| (i as i64 * n as i64, a.clone())),
        )
    }

    pub fn add_term(&mut self, r: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(r).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn coeff(&self, r: i64) -> Rational {
        self.terms.get(&r).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add(&self, other: &LPoly) -> LPoly {
        let mut out = self.clone();
        for (r, c) in &other.terms {
            out.add_term(*r, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LPoly) -> LPoly {
        self.add(&other.scale(&q(-1)))
    }

    pub fn mul(&self, other: &LPoly) -> LPoly {
        let mut out = LPoly::zero();
        for (r, a) in &self.terms {
            for (s, b) in &other.terms {
                out.add_term(r + s, a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> LPoly {
        (0..e).fold(LPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &Rational) -> LPoly {
        if c.is_zero() {
            return LPoly::zero();
        }
        LPoly {
            terms: self.terms.iter().map(|(r, a)| (*r, a * c)).collect(),
        }
    }

    /// Multiplies by `L^k`.
    pub fn shift(&self, k: i64) -> LPoly {
        LPoly {
            terms: self.terms.iter().map(|(r, a)| (r + k, a.clone())).collect(),
        }
    }

    /// `D = x d/dx`, using `D(L^r) = (r/n)(L^{n+r} - L^r)`.
    pub fn d(&self, n: u32) -> LPoly {
        let mut out = LPoly::zero();
        for (r, a) in &self.terms {
            let c = a * q(*r) / q(n as i64);
            out.add_term(r + n as i64, c.clone());
            out.add_term(*r, -c);
        }
        out
    }

    /// Value at `L = 1`, i.e. at `x = 0`.
    pub fn at_one(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// True when every exponent is at least 1 (membership in `L ℚ[L]`).
    pub fn in_l_ql(&self) -> bool {
        self.min_exponent().is_none_or(|r| r >= 1)
    }

    /// Exact quotient by `L^n - 1`, or `None` if it does not divide.
    pub fn div_by_x_minus_one(&self, n: u32) -> Option<LPoly> {
        let n = n as i64;
        let mut rest = self.clone();
        let mut quot = LPoly::zero();
        while let Some(top) = rest.max_exponent() {
            let c = rest.coeff(top);
            let r = top - n;
            if rest.min_exponent().unwrap() > r {
                return None;
            }
            quot.add_term(r, c.clone());
            rest.add_term(top, -c.clone());
            rest.add_term(r, c);
        }
        Some(quot)
    }

    /// Substitutes the power series `L` (order `order`).
    pub fn to_xseries(&self, n: u32, order: usize) -> Result<XSeries<Rational>> {
        let l = l_series(n, order);
        let mut out = XSeries::zero(order);
        for (r, c) in &self.terms {
            out = out.add(&l.powi(*r as i32)?.scale(c))?;
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (r, c) in &self.terms {
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match r {
                0 => String::new(),
                1 => "L".into(),
                _ => format!("L^{r}"),
            };
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{a}*{mono}"));
            }
        }
        s
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Serialized as `{"<exponent>": "p/q", ...}`.
impl Serialize for LPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (r, c) in &self.terms {
            m.serialize_entry(&r.to_string(), &c.to_string())?;
        }
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_l_matches_series() {
        // D(L) = (1/n)(L^{n+1} - L) as power series
        let n = 3;
        let l = LPoly::monomial(q(1), 1);
        let lhs = l.d(n).to_xseries(n, 6).unwrap();
        let rhs = l_series(n, 6).apply_d();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn division_by_x_minus_one() {
        let n = 2;
        let p = LPoly::from_terms([(3, q(1)), (1, q(-1))]); // L(L^2 - 1)
        assert_eq!(p.div_by_x_minus_one(n), Some(LPoly::monomial(q(1), 1)));
        assert_eq!(LPoly::monomial(q(1), 1).div_by_x_minus_one(n), None);
    }

    #[test]
    fn render_and_value_at_one() {
        let p = LPoly::from_terms([(1, q(3)), (5, q(-3))]);
        assert_eq!(p.render(), "3*L - 3*L^5");
        assert!(p.at_one().is_zero());
        assert!(p.in_l_ql());
    }
}
