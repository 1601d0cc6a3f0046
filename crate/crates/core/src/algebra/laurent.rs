//! Expansions of rational functions at `w = ∞`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::ring::Rational;

/// Finitely many terms `c_k w^k` of an expansion at infinity, from the top
/// exponent down to `min_exponent`. Missing keys are zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentAtInfinity {
    pub top: i64,
    pub min_exponent: i64,
    pub terms: BTreeMap<i64, Rational>,
}

impl LaurentAtInfinity {
    pub fn coeff(&self, k: i64) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Polynomial part (nonnegative exponents) as a polynomial in `w`.
    pub fn polynomial_part(&self) -> Poly<Rational> {
        let top = self.top.max(0) as usize;
        Poly::new((0..=top).map(|k| self.coeff(k as i64)).collect())
    }
}

/// Expands `f` at infinity down to `w^min_exponent`.
pub fn laurent_at_infinity(f: &RatFunc, min_exponent: i64) -> LaurentAtInfinity {
    laurent_of_quotient(f.numer().coeffs(), f.denom().coeffs(), min_exponent)
}

/// Expands `num / den` (ascending coefficient slices, not necessarily
/// coprime, `den` nonzero) at infinity down to `w^min_exponent`.
///
/// With `e = deg num - deg den` the quotient is `u^(-e) Ñ(u) / D̃(u)` in
/// `u = 1/w`, where the reversed polynomials satisfy `D̃(0) ≠ 0`; only the
/// top `e - min_exponent + 1` coefficients of each side are read.
pub fn laurent_of_quotient(num: &[Rational], den: &[Rational], min_exponent: i64) -> LaurentAtInfinity {
    let trim = |p: &[Rational]| -> usize { p.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1) };
    let (ln, ld) = (trim(num), trim(den));
    assert!(ld > 0, "zero denominator");
    if ln == 0 {
        return LaurentAtInfinity {
            top: min_exponent,
            min_exponent,
            terms: BTreeMap::new(),
        };
    }
    let e = ln as i64 - ld as i64;
    let num: Vec<&Rational> = num[..ln].iter().rev().collect();
    let den: Vec<&Rational> = den[..ld].iter().rev().collect();
    let count = (e - min_exponent + 1).max(0) as usize;
    let d0 = den[0];
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for i in 0..count {
        let mut acc = num.get(i).map_or_else(Rational::zero, |c| (*c).clone());
        for j in 1..=i.min(den.len() - 1) {
            acc -= den[j] * &out[i - j];
        }
        out.push(acc / d0);
    }
    let terms = out
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (e - i as i64, c))
        .collect();
    LaurentAtInfinity {
        top: e,
        min_exponent,
        terms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::q;

    #[test]
    fn expands_one_over_w_minus_one() {
        // 1/(w-1) = w^-1 + w^-2 + ...
        let f = RatFunc::new(Poly::constant(q(1)), Poly::new(vec![q(-1), q(1)]));
        let l = laurent_at_infinity(&f, -4);
        assert_eq!(l.top, -1);
        for k in -4..=-1 {
            assert_eq!(l.coeff(k), q(1));
        }
        assert!(l.coeff(0).is_zero());
    }

    #[test]
    fn w_squared_over_w_plus_one() {
        // w^2/(w+1) = w - 1 + w^-1 - w^-2 + ...
        let f = RatFunc::new(Poly::new(vec![q(0), q(0), q(1)]), Poly::new(vec![q(1), q(1)]));
        let l = laurent_at_infinity(&f, -3);
        let got: Vec<_> = (-3..=1).rev().map(|k| l.coeff(k)).collect();
        assert_eq!(got, vec![q(1), q(-1), q(1), q(-1), q(1)]);
    }

    #[test]
    fn unreduced_quotient_matches() {
        // (w+1)(w+2) / ((w+1) w) = 1 + 2/w
        let l = laurent_of_quotient(&[q(2), q(3), q(1)], &[q(0), q(1), q(1)], -2);
        assert_eq!(l.coeff(0), q(1));
        assert_eq!(l.coeff(-1), q(2));
        assert!(l.coeff(-2).is_zero());
    }

    #[test]
    fn polynomial_is_its_own_expansion() {
        let p = Poly::new(vec![q(3), q(0), q(2)]);
        let l = laurent_at_infinity(&RatFunc::from_poly(p.clone()), -3);
        assert_eq!(l.polynomial_part(), p);
        assert!(l.coeff(-1).is_zero());
    }
}
