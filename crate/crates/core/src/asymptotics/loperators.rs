//! The differential operators 𝕃_k = Σ_i c_i(Lⁿ) Dⁱ.

use num_traits::Zero;

use crate::algebra::ring::{binomial, pow_int, q, Rational};
use crate::algebra::stirling::elementary_symmetric;
use crate::algebra::Poly;
use crate::error::{Error, Result};

use super::htables::{build_h_tables, HPolyTable};
use super::lpoly::LPoly;

/// `𝕃_k = Σ_{i=0}^{k} coeffs[i](X) Dⁱ` with `X = Lⁿ`.
#[derive(Clone, Debug, PartialEq)]
pub struct LOperator {
    pub n: u32,
    pub k: usize,
    pub coeffs: Vec<Poly<Rational>>,
}

impl LOperator {
    pub fn apply(&self, f: &LPoly) -> LPoly {
        let mut out = LPoly::zero();
        let mut di = f.clone();
        for c in &self.coeffs {
            out = out.add(&LPoly::from_x_poly(c, self.n).mul(&di));
            di = di.d(self.n);
        }
        out
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({}) D^{i}", c.render("X")))
            .collect();
        parts.join(" + ")
    }
}

fn x_minus_one() -> Poly<Rational> {
    Poly::new(vec![q(-1), q(1)])
}

/// Coefficient of `D^i` in 𝕃_k:
/// `C(n,i) ℋ_{n-i,k-i} - (X-1) Σ_{r=1}^{k-i} C(n-r,i) S_r(n)/n^r ℋ_{n-i-r,k-i-r}`.
fn l_coefficient(n: u32, k: usize, i: usize, t: &HPolyTable, s: &[num_bigint::BigInt]) -> Poly<Rational> {
    let nn = n as usize;
    let bin = |a: usize, b: usize| Rational::from_integer(binomial(a as i64, b as i64));
    let mut inner = Poly::zero();
    for r in 1..=k - i {
        let c = bin(nn - r, i) * Rational::from_integer(s[r].clone())
            / Rational::from_integer(pow_int(n as i64, r as u32));
        inner = inner + t.h(nn - i - r, k - i - r).scale(&c);
    }
    t.h(nn - i, k - i).scale(&bin(nn, i)) - x_minus_one() * inner
}

/// 𝕃_1 … 𝕃_n, with 𝕃_1 and 𝕃_2 checked against their closed forms.
pub fn build_l_operators(n: u32) -> Result<Vec<LOperator>> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let ops = l_operators_from_table(&build_h_tables(n, n as usize)?);
    check_low_operators(n, &ops)?;
    Ok(ops)
}

/// 𝕃_1 … 𝕃_n from a given ℋ-table (which must reach `m = n`), unchecked.
pub fn l_operators_from_table(t: &HPolyTable) -> Vec<LOperator> {
    let n = t.n;
    let s = elementary_symmetric(n);
    (1..=n as usize)
        .map(|k| LOperator {
            n,
            k,
            coeffs: (0..=k).map(|i| l_coefficient(n, k, i, t, &s)).collect(),
        })
        .collect()
}

/// `𝕃_1 = nD - (X - 1)` and
/// `𝕃_2 = C(n,2) D² - 3(n-1)/2 (X-1) D + (n-1)/n ((n-2)(n-11)/24 X - 1)(X-1)`.
pub fn closed_form_l1_l2(n: u32) -> (Vec<Poly<Rational>>, Vec<Poly<Rational>>) {
    let nq = q(n as i64);
    let xm1 = x_minus_one();
    let l1 = vec![-xm1.clone(), Poly::constant(nq.clone())];
    let lin = Poly::new(vec![q(-1), q((n as i64 - 2) * (n as i64 - 11)) / q(24)]);
    let c0 = (lin * xm1.clone()).scale(&(q(n as i64 - 1) / &nq));
    let c1 = xm1.scale(&(q(-3 * (n as i64 - 1)) / q(2)));
    let c2 = Poly::constant(Rational::from_integer(binomial(n as i64, 2)));
    (l1, vec![c0, c1, c2])
}

pub fn check_low_operators(n: u32, ops: &[LOperator]) -> Result<()> {
    let (l1, l2) = closed_form_l1_l2(n);
    if ops[0].coeffs != l1 {
        return Err(Error::TableInconsistency(format!(
            "L_1 = {} differs from nD - (X-1)",
            ops[0].render()
        )));
    }
    if ops.len() >= 2 && ops[1].coeffs != l2 {
        return Err(Error::TableInconsistency(format!(
            "L_2 = {} differs from its closed form",
            ops[1].render()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l1_kills_l() {
        for n in 1..=6 {
            let ops = build_l_operators(n).unwrap();
            assert!(ops[0].apply(&LPoly::monomial(q(1), 1)).is_zero());
        }
    }

    #[test]
    fn l1_is_conjugated_d() {
        // 𝕃_1(f) = n L D(L⁻¹ f)
        let n = 4;
        let ops = build_l_operators(n).unwrap();
        let f = LPoly::from_terms([(2, q(3)), (-1, q(5)), (7, q(-2))]);
        let rhs = f.shift(-1).d(n).shift(1).scale(&q(n as i64));
        assert_eq!(ops[0].apply(&f), rhs);
    }
}
