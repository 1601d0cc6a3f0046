//! The leading behaviour of P_k in n: the numbers α_j and polynomials e_k.

use num_traits::Zero;

use crate::algebra::ring::{factorial, q, Rational};
use crate::algebra::series::XSeries;
use crate::algebra::stirling::stirling2_table;
use crate::algebra::Poly;
use crate::error::Result;
use crate::mirror::verify::compare_series;
use crate::report::Report;

/// `α_0 … α_jmax`, the coefficients of `u^{2j}` in `(u/2)/sinh(u/2)`.
pub fn alphas(jmax: usize) -> Result<Vec<Rational>> {
    // sinh(u/2)/(u/2) in t = u²: Σ_m t^m / (4^m (2m+1)!)
    let s = XSeries::from_fn(jmax, |m| {
        let den = num_traits::pow(num_bigint::BigInt::from(4), m) * factorial(2 * m as u64 + 1);
        Rational::new(1.into(), den)
    });
    Ok(s.inverse()?.coeffs().to_vec())
}

/// `e_k(X) = Σ_{l=1}^{k} (-1)^{k-l} (l-1)! 𝔖_k^{(l)} X^l` for `k >= 2`, and
/// `e_1 = X - 1` (the sum alone gives `X`, which misses the constant needed for
/// `e_1(1/(1-x)) = Σ x^d`).
pub fn ek(k: usize) -> Poly<Rational> {
    let s2 = stirling2_table(k);
    let mut c = vec![Rational::zero(); k + 1];
    for l in 1..=k {
        let v = Rational::from_integer(factorial(l as u64 - 1) * &s2[k][l]);
        c[l] = if (k - l) % 2 == 0 { v } else { -v };
    }
    if k == 1 {
        c[0] = q(-1);
    }
    Poly::new(c)
}

/// `e_k(1/(1-x)) = Σ_{d>=1} d^{k-1} x^d` mod `x^{order+1}` for `1 <= k <= kmax`.
/// The perturbation adds `x^d` to the left side for `k = kmax`.
pub fn verify_ek_identity(kmax: usize, order: usize, perturb: Option<usize>) -> Result<Report> {
    let check = "ek-identity";
    let geom = XSeries::from_fn(order, |_| q(1));
    for k in 1..=kmax {
        let mut lhs = geom.substitute_into(&ek(k));
        if k == kmax {
            if let Some(d) = perturb.filter(|&d| d <= order) {
                let c = lhs.coeff(d) + q(1);
                lhs.set_coeff(d, c);
            }
        }
        let rhs = XSeries::from_fn(order, |d| if d == 0 { q(0) } else { q((d as i64).pow(k as u32 - 1)) });
        let r = compare_series(check, 0, &format!("e_{k}:"), &rhs, &lhs);
        if !r.passed() {
            return Ok(r);
        }
    }
    Ok(Report::pass(check, 0, order))
}

/// Sign convention for the odd case of the leading-term formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddSign {
    /// `(j-1) α_j e_k(X) n^{4j}` as literally stated.
    Literal,
    /// `(1-j) α_j e_k(X) n^{4j}`, the sign the tabulated P_1 and P_5 carry.
    Tabulated,
}

/// Expected leading n-degree and leading coefficient of P_k, `k >= 1`.
pub fn leading_term(k: usize, sign: OddSign) -> Result<(usize, Poly<Rational>)> {
    let j = k / 2;
    let alpha = alphas(j)?[j].clone();
    if k % 2 == 0 {
        Ok((4 * j - 1, ek(k).scale(&alpha)))
    } else {
        let m = match sign {
            OddSign::Literal => q(j as i64 - 1),
            OddSign::Tabulated => q(1 - j as i64),
        };
        Ok((4 * j, ek(k).scale(&(alpha * m))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::qf;

    #[test]
    fn alpha_values() {
        assert_eq!(alphas(3).unwrap(), vec![q(1), qf(-1, 24), qf(7, 5760), qf(-31, 967680)]);
    }

    #[test]
    fn low_ek() {
        assert_eq!(ek(1), Poly::new(vec![q(-1), q(1)]));
        assert_eq!(ek(2), Poly::new(vec![q(0), q(-1), q(1)]));
        assert_eq!(ek(3), Poly::new(vec![q(0), q(1), q(-3), q(2)]));
    }

    #[test]
    fn ek_identity_and_control() {
        assert!(verify_ek_identity(7, 12, None).unwrap().passed());
        assert_eq!(verify_ek_identity(5, 12, Some(9)).unwrap().failure_degree(), Some(9));
    }
}
