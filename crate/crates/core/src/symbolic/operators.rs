//! Stirling polynomials, the Q-table and 𝕃_k with `n` replaced by the
//! formal `a`.

use num_traits::{One, Zero};

use crate::algebra::linalg::lagrange_interpolate;
use crate::algebra::ring::{q, Rational};
use crate::algebra::{Poly, RatFunc};
use crate::asymptotics::build_l_operators;
use crate::error::{Error, Result};

use super::ring::{a, binomial_shifted, rc, SymElem};

/// Faulhaber polynomial `p_k(a) = Σ_{i=1}^{a} i^k`, by interpolation through
/// `a = 0 … k+1`.
pub fn power_sum(k: u32) -> Poly<Rational> {
    let mut acc = Rational::zero();
    let mut points = vec![(q(0), q(0))];
    for m in 1..=(k as i64 + 1) {
        acc += Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(m), k as usize));
        points.push((q(m), acc.clone()));
    }
    lagrange_interpolate(&points)
}

/// `S_0(a) … S_rmax(a)` from Newton's identities
/// `r S_r = Σ_{i=1}^{r} (-1)^{i-1} S_{r-i} p_i`.
pub fn symbolic_sr(rmax: usize) -> Vec<Poly<Rational>> {
    let p: Vec<Poly<Rational>> = (0..=rmax as u32).map(power_sum).collect();
    let mut s = vec![Poly::one()];
    for r in 1..=rmax {
        let mut acc = Poly::zero();
        for i in 1..=r {
            let term = s[r - i].clone() * p[i].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        s.push(acc.scale(&(q(1) / q(r as i64))));
    }
    s
}

fn lift(p: &Poly<Rational>) -> RatFunc {
    RatFunc::from_poly(p.clone())
}

fn x_minus_one() -> Poly<RatFunc> {
    Poly::new(vec![rc(q(-1)), RatFunc::one()])
}

/// `Q_{j,k}` over ℚ(a), `0 <= k <= j <= jmax`.
pub fn symbolic_q_table(jmax: usize) -> Vec<Vec<Poly<RatFunc>>> {
    let inv_a = RatFunc::one() / &a();
    let mut qt = vec![vec![Poly::<RatFunc>::zero(); jmax + 1]; jmax + 1];
    qt[0][0] = Poly::one();
    for j in 1..=jmax {
        for k in 0..=j {
            let prev = qt[j - 1][k].clone();
            let prev_km1 = if k >= 1 { qt[j - 1][k - 1].clone() } else { Poly::zero() };
            let inner = prev.scale(&rc(q(k as i64))) + prev_km1.scale(&rc(q((k + j) as i64 - 1)));
            qt[j][k] = x_minus_one() * (prev.derivative().shift(1) + inner.scale(&inv_a));
        }
    }
    qt
}

/// ℋ_{a-c, j} as a polynomial in X over ℚ(a).
fn symbolic_h(qt: &[Vec<Poly<RatFunc>>], c: i64, j: usize) -> Poly<RatFunc> {
    if j == 0 {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for k in 1..=j {
        acc = acc + qt[j][k].scale(&lift(&binomial_shifted(c, j + k)));
    }
    acc
}

/// 𝕃_k over ℚ(a) as `Σ_i coeffs[i](X) Dⁱ`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymOperator {
    pub k: usize,
    pub coeffs: Vec<Poly<RatFunc>>,
}

impl SymOperator {
    pub fn apply(&self, f: &SymElem) -> SymElem {
        let mut out = SymElem::zero();
        let mut di = f.clone();
        for c in &self.coeffs {
            if !c.is_zero() {
                out = out.add(&SymElem::from_x_poly(c, 0).mul(&di));
            }
            di = di.d();
        }
        out
    }

    /// `a -> n`, as coefficient polynomials in X; `None` at a pole.
    pub fn specialize(&self, n: u32) -> Option<Vec<Poly<Rational>>> {
        let at = q(n as i64);
        self.coeffs
            .iter()
            .map(|c| c.coeffs().iter().map(|v| v.eval(&at)).collect::<Option<Vec<_>>>().map(Poly::new))
            .collect()
    }
}

/// 𝕃_1 … 𝕃_kmax with
/// `c_i = C(a,i) ℋ_{a-i,k-i} - (X-1) Σ_r C(a-r,i) S_r(a)/a^r ℋ_{a-i-r,k-i-r}`.
pub fn symbolic_l_operators(kmax: usize) -> Vec<SymOperator> {
    let qt = symbolic_q_table(kmax);
    let s = symbolic_sr(kmax);
    let xm1 = x_minus_one();
    (1..=kmax)
        .map(|k| {
            let coeffs = (0..=k)
                .map(|i| {
                    let mut inner = Poly::zero();
                    let mut a_pow = RatFunc::one();
                    for r in 1..=k - i {
                        a_pow = a_pow * &a();
                        let c = lift(&(binomial_shifted(r as i64, i) * s[r].clone())) / &a_pow;
                        inner = inner + symbolic_h(&qt, (i + r) as i64, k - i - r).scale(&c);
                    }
                    let first = symbolic_h(&qt, i as i64, k - i).scale(&lift(&binomial_shifted(0, i)));
                    first - xm1.clone() * inner
                })
                .collect();
            SymOperator { k, coeffs }
        })
        .collect()
}

/// Specializes the symbolic 𝕃_k at each `n` and compares with the numeric
/// operators; 𝕃_k for `k > n` must specialize to zero.
pub fn check_operator_specialization(ops: &[SymOperator], ns: &[u32]) -> Result<()> {
    for &n in ns {
        let numeric = build_l_operators(n)?;
        for op in ops {
            let got = op
                .specialize(n)
                .ok_or_else(|| Error::SpecializationMismatch(format!("L_{} has a pole at a = {n}", op.k)))?;
            let ok = match numeric.get(op.k - 1) {
                Some(num) => num.coeffs == got,
                None => got.iter().all(|c| c.is_zero()),
            };
            if !ok {
                return Err(Error::SpecializationMismatch(format!(
                    "L_{} at a = {n} differs from the numeric operator",
                    op.k
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::stirling::elementary_symmetric;

    #[test]
    fn s1_and_s2() {
        let s = symbolic_sr(2);
        assert_eq!(s[1], Poly::new(vec![q(0), Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into())]));
        assert_eq!(s[2].eval(&q(3)), q(11));
    }

    #[test]
    fn sr_matches_integer_tables() {
        let s = symbolic_sr(12);
        for n in 1..=12u32 {
            let ints = elementary_symmetric(n);
            for r in 0..=12usize {
                let expected = ints.get(r).cloned().unwrap_or_default();
                assert_eq!(s[r].eval(&q(n as i64)), Rational::from_integer(expected), "S_{r}({n})");
            }
        }
    }

    #[test]
    fn operators_specialize() {
        let ops = symbolic_l_operators(5);
        check_operator_specialization(&ops, &[3, 4, 5, 6]).unwrap();
    }
}
