//! The coefficients P_k(n, X) of
//! `1 + (x/w) ∂_x log 𝔽 = L Σ_k P_k(n, Lⁿ) / (nLw)^k`.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::linalg::{lagrange_interpolate, solve, Solution};
use crate::algebra::ring::{q, qf, rational_string, Rational};
use crate::algebra::series::XSeries;
use crate::algebra::Poly;
use crate::asymptotics::expand_logf_uadic;
use crate::error::{Error, Result};
use crate::mirror::{l_series, one_minus_nn_x};

/// The x-series `n^k L^{k-1} Dμ_{k-1}` (and `(1 + Dμ)/L` for `k = 0`), which
/// the conjecture says are polynomials of degree `<= k` in `X = Lⁿ`.
pub fn pk_series(n: u32, kmax: usize, order: usize) -> Result<Vec<XSeries<Rational>>> {
    let e = expand_logf_uadic(n, order, kmax.saturating_sub(1))?;
    let l = l_series(n, order);
    let mut out = vec![e.mu.apply_d().add(&XSeries::one(order))?.div(&l)?];
    for k in 1..=kmax {
        let c = Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(n), k));
        out.push(l.powi(k as i32 - 1)?.mul(&e.mus[k - 1].apply_d())?.scale(&c));
    }
    Ok(out)
}

/// A fitted `P_k(n, X) = Σ_i coeffs[i] X^i` for one numeric `n`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PkFit {
    pub n: u32,
    pub k: usize,
    #[serde(serialize_with = "ser_rationals")]
    pub coeffs: Vec<Rational>,
    pub order: usize,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(rational_string))
}

/// Writes `series` as a polynomial of degree `<= k` in `X = (1 - nⁿx)⁻¹`.
///
/// The coefficients are fixed by the rows `x^0 … x^k` (the Pascal-type
/// matrix there is invertible); every further row is a consistency
/// equation, and the first one that fails is reported.
pub fn fit_pk(n: u32, k: usize, series: &XSeries<Rational>) -> Result<PkFit> {
    let order = series.order();
    if order < k {
        return Err(Error::RankDeficient { n, k });
    }
    let x = one_minus_nn_x(n, -1, order);
    let mut cols = vec![XSeries::one(order)];
    for i in 1..=k {
        cols.push(cols[i - 1].mul(&x)?);
    }
    let a: Vec<Vec<Rational>> = (0..=k).map(|m| cols.iter().map(|c| c.coeff(m).clone()).collect()).collect();
    let b: Vec<Rational> = (0..=k).map(|m| series.coeff(m).clone()).collect();
    let coeffs = match solve(&a, &b) {
        Solution::Unique(c) => c,
        _ => return Err(Error::RankDeficient { n, k }),
    };
    let mut fitted = XSeries::zero(order);
    for (c, col) in coeffs.iter().zip(&cols) {
        fitted = fitted.add(&col.scale(c))?;
    }
    if let Some(d) = fitted.first_difference(series) {
        return Err(Error::FitResidualNonzero { n, k, x_degree: d });
    }
    Ok(PkFit { n, k, coeffs, order })
}

/// Fits `P_0 … P_kmax` for one `n`. The perturbation adds `x^d` to the
/// series of `P_kmax`.
pub fn compute_pk(n: u32, kmax: usize, order: usize, perturb: Option<usize>) -> Result<Vec<PkFit>> {
    let mut series = pk_series(n, kmax, order)?;
    if let Some(d) = perturb {
        if d <= order {
            let c = series[kmax].coeff(d) + q(1);
            series[kmax].set_coeff(d, c);
        }
    }
    series.iter().enumerate().map(|(k, s)| fit_pk(n, k, s)).collect()
}

/// `P_k(n, X) = Σ_i coeffs[i](n) X^i` with polynomial dependence on `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct PkPolynomial {
    pub k: usize,
    pub coeffs: Vec<Poly<Rational>>,
}

#[derive(Serialize)]
struct NPolyRecord {
    num: Vec<String>,
    den: Vec<String>,
}

impl Serialize for PkPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let x_coeffs: Vec<NPolyRecord> = self
            .coeffs
            .iter()
            .map(|p| NPolyRecord {
                num: p.coeffs().iter().map(rational_string).collect(),
                den: vec!["1".into()],
            })
            .collect();
        let mut st = s.serialize_struct("PkPolynomial", 2)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("x_coeffs", &x_coeffs)?;
        st.end()
    }
}

impl PkPolynomial {
    pub fn zero(k: usize) -> Self {
        PkPolynomial {
            k,
            coeffs: vec![Poly::zero(); k + 1],
        }
    }

    /// Value at a numeric `n`, as coefficients of `X^0 … X^k`.
    pub fn at(&self, n: u32) -> Vec<Rational> {
        self.coeffs.iter().map(|c| c.eval(&q(n as i64))).collect()
    }

    /// Largest degree in `n` over all X-coefficients.
    pub fn n_degree(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }

    /// Coefficient of `n^d`, as a polynomial in X.
    pub fn n_coefficient(&self, d: usize) -> Poly<Rational> {
        Poly::new(self.coeffs.iter().map(|c| c.coeff(d)).collect())
    }

    /// Exact quotient of every X-coefficient by `p(n)`.
    pub fn div_n_poly(&self, p: &Poly<Rational>) -> Option<PkPolynomial> {
        let coeffs = self.coeffs.iter().map(|c| c.div_exact(p)).collect::<Option<Vec<_>>>()?;
        Some(PkPolynomial { k: self.k, coeffs })
    }

    /// True when `X(X-1)` divides `P_k` in ℚ[n][X].
    pub fn divisible_by_x_x_minus_one(&self) -> bool {
        let sum = self.coeffs.iter().fold(Poly::zero(), |acc, c| acc + c.clone());
        self.coeffs[0].is_zero() && sum.is_zero()
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({}) X^{i}", c.render("n")))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Interpolates each X-coefficient over the given fits (one per `n`, all
/// for the same `k`). The last node is held out and must be reproduced by
/// the interpolant through the others.
pub fn interpolate_pk(k: usize, fits: &[PkFit]) -> Result<PkPolynomial> {
    if fits.len() < 2 {
        return Err(Error::InvalidInput("interpolation needs at least two values of n".into()));
    }
    let mut coeffs = Vec::with_capacity(k + 1);
    for i in 0..=k {
        let points: Vec<(Rational, Rational)> = fits
            .iter()
            .map(|f| (q(f.n as i64), f.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)))
            .collect();
        let short = lagrange_interpolate(&points[..points.len() - 1]);
        let (xn, yn) = points.last().unwrap();
        if &short.eval(xn) != yn {
            return Err(Error::InterpolationUnstable { k, x_power: i });
        }
        coeffs.push(short);
    }
    Ok(PkPolynomial { k, coeffs })
}

fn npoly(c: &[i64]) -> Poly<Rational> {
    Poly::new(c.iter().map(|&v| q(v)).collect())
}

/// Multiplies `Σ c_i X^i` by `X - 1`.
fn times_x_minus_one(c: &[Poly<Rational>]) -> Vec<Poly<Rational>> {
    let mut out = vec![Poly::zero(); c.len() + 1];
    for (i, ci) in c.iter().enumerate() {
        out[i + 1] = out[i + 1].clone() + ci.clone();
        out[i] = out[i].clone() - ci.clone();
    }
    out
}

/// `(n+1)(n-1)(n-2)`.
pub fn common_factor() -> Poly<Rational> {
    npoly(&[1, 1]) * npoly(&[-1, 1]) * npoly(&[-2, 1])
}

/// The A_1, A_2, A_3 and B_1 … B_4 polynomials in n.
pub fn a_b_coefficients() -> (Vec<Poly<Rational>>, Vec<Poly<Rational>>) {
    let p = |c: &[i64]| npoly(c);
    let c7 = p(&[-24, 22, -17, 7]); // 7n³ - 17n² + 22n - 24
    let c7b = p(&[14, -9, 7]); // 7n² - 9n + 14
    let a1 = p(&[-3, 1]) * c7.clone();
    let a2 = (p(&[-3, 2]) * p(&[-1, 3]) * c7b.clone()).scale(&q(-1));
    let a3 = p(&[-2, -23, 52, -33, 14]).scale(&q(3));
    let b1 = (p(&[-3, 1]) * p(&[-4, 1]) * c7).scale(&q(-1));
    let b2 = (p(&[-1, 1]) * p(&[-2, 1]) * p(&[-124, 152, -115, 49])).scale(&q(2));
    let b3 = (p(&[-1, 1]) * p(&[-1, 3]) * p(&[-4, 3]) * c7b).scale(&q(-4));
    let b4 = (p(&[-1, 1]) * p(&[-2, 3]) * p(&[-1, 17, -11, 7])).scale(&q(8));
    (vec![a1, a2, a3], vec![b1, b2, b3, b4])
}

/// The tabulated P_0 … P_5.
pub fn expected_pk(k: usize) -> Option<PkPolynomial> {
    let cf = common_factor();
    let coeffs = match k {
        0 => vec![npoly(&[1])],
        1 => vec![npoly(&[-1]), npoly(&[1])],
        2 => {
            let c = cf.scale(&qf(-1, 24));
            times_x_minus_one(&[Poly::zero(), c])
        }
        3 => vec![Poly::zero(); 4],
        4 => {
            let (a, _) = a_b_coefficients();
            let c = cf.scale(&qf(1, 5760));
            let inner: Vec<Poly<Rational>> = std::iter::once(Poly::zero()).chain(a.into_iter().map(|ai| ai * c.clone())).collect();
            times_x_minus_one(&inner)
        }
        5 => {
            let (_, b) = a_b_coefficients();
            let c = cf.scale(&qf(-1, 5760));
            let inner: Vec<Poly<Rational>> = std::iter::once(Poly::zero()).chain(b.into_iter().map(|bi| bi * c.clone())).collect();
            times_x_minus_one(&inner)
        }
        _ => return None,
    };
    Some(PkPolynomial { k, coeffs })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_pk_for_n5() {
        let fits = compute_pk(5, 3, 8, None).unwrap();
        assert_eq!(fits[0].coeffs, vec![q(1)]);
        assert_eq!(fits[1].coeffs, vec![q(-1), q(1)]);
        assert_eq!(fits[2].coeffs, vec![q(0), q(3), q(-3)]);
        assert!(fits[3].coeffs.iter().all(Zero::is_zero));
    }

    #[test]
    fn expected_p2_at_5() {
        assert_eq!(expected_pk(2).unwrap().at(5), vec![q(0), q(3), q(-3)]);
    }

    #[test]
    fn perturbed_fit_fails_at_degree() {
        assert_eq!(
            compute_pk(4, 3, 8, Some(6)),
            Err(Error::FitResidualNonzero { n: 4, k: 3, x_degree: 6 })
        );
    }

    #[test]
    fn insufficient_order_is_rank_deficient() {
        let s = XSeries::one(2);
        assert_eq!(fit_pk(3, 4, &s), Err(Error::RankDeficient { n: 3, k: 4 }));
    }
}
