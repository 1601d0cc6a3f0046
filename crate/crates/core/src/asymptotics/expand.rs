//! The expansion of log 𝔽 at `w = ∞`: `log 𝔽 ~ μ w + Σ_{j>=0} μ_j w^{-j}`,
//! and `𝔽 ~ e^{μw} Σ_s Φ_s w^{-s}`.
//!
//! Two independent exact routes are provided. [`expand_logf`] computes every
//! x-coefficient of log 𝔽 as a rational function of `w` and expands it with
//! [`laurent_of_quotient`]. [`expand_logf_uadic`] writes the x^d coefficient
//! of 𝔽 as `w^d φ_d(1/w)` and takes the logarithm in ℚ[[u]][[wx]], which
//! reaches large `n` cheaply.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::algebra::laurent::laurent_of_quotient;
use crate::algebra::ring::{binomial, factorial, pow_int, q, Rational};
use crate::algebra::series::XSeries;
use crate::algebra::zpoly::{QPoly, ZPoly};
use crate::error::{Error, Result};
use crate::mirror::{build_f, LadderSeries};

#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticExpansion {
    pub n: u32,
    pub x_order: usize,
    pub smax: usize,
    /// Coefficient of `w^1` in log 𝔽.
    pub mu: XSeries<Rational>,
    /// `μ_0 … μ_smax`, the coefficients of `w^0 … w^{-smax}`.
    pub mus: Vec<XSeries<Rational>>,
    /// `Φ_0 … Φ_smax`.
    pub phi: Vec<XSeries<Rational>>,
}

/// `Σ_s Φ_s t^s = exp(Σ_j μ_j t^j)`: `Φ_0 = e^{μ_0}` and `Φ_s = Φ_0 e_s`
/// with `s e_s = Σ_{j=1}^{s} j μ_j e_{s-j}`.
pub fn phis_from_mus(mus: &[XSeries<Rational>]) -> Result<Vec<XSeries<Rational>>> {
    let order = mus[0].order();
    let phi0 = mus[0].exp()?;
    let mut e = vec![XSeries::one(order)];
    for s in 1..mus.len() {
        let mut acc = XSeries::zero(order);
        for j in 1..=s {
            acc = acc.add(&mus[j].mul(&e[s - j])?.scale(&q(j as i64)))?;
        }
        e.push(acc.scale(&(q(1) / q(s as i64))));
    }
    e.iter().map(|es| phi0.mul(es)).collect()
}

/// Log coefficient `ℓ_d = Λ_d / Q_d` with `Q_d = Π_r g_r^{⌊d/r⌋}`.
#[derive(Clone, Debug)]
pub struct LogCoefficient {
    pub numer: QPoly,
    pub denom: ZPoly,
}

struct PowerCache<'a> {
    f: &'a LadderSeries,
    cache: HashMap<(usize, u32), ZPoly>,
}

impl PowerCache<'_> {
    fn power(&mut self, r: usize, e: u32) -> ZPoly {
        let g = self.f.ladder().step(r);
        self.cache.entry((r, e)).or_insert_with(|| g.pow(e)).clone()
    }

    fn product(&mut self, exps: impl Iterator<Item = (usize, u32)>) -> ZPoly {
        let mut acc = ZPoly::one();
        for (r, e) in exps {
            if e > 0 {
                acc = acc.mul(&self.power(r, e));
            }
        }
        acc
    }
}

/// log of a ladder series with constant term 1, via
/// `d ℓ_d = d f_d - Σ_{k=1}^{d-1} k ℓ_k f_{d-k}`. Each term `ℓ_k f_{d-k}`
/// has denominator dividing `Q_d`, because
/// `⌊k/r⌋ + [r <= d-k] <= ⌊d/r⌋`.
pub fn log_ladder(f: &LadderSeries) -> Vec<LogCoefficient> {
    let order = f.order();
    let mut cache = PowerCache {
        f,
        cache: HashMap::new(),
    };
    let mut out: Vec<LogCoefficient> = vec![LogCoefficient {
        numer: QPoly::zero(),
        denom: ZPoly::one(),
    }];
    for d in 1..=order {
        let fl = |r: usize| (d / r) as u32;
        let denom = cache.product((1..=d).map(|r| (r, fl(r))));
        let cof = cache.product((1..=d).map(|r| (r, fl(r) - 1)));
        let mut numer = f.numerator(d).mul_z(&cof);
        let mut sum = QPoly::zero();
        for k in 1..d {
            let lk = &out[k].numer;
            if lk.is_zero() || f.numerator(d - k).is_zero() {
                continue;
            }
            let exps = (1..=d).map(|r| {
                let used = (k / r) as u32 + u32::from(r <= d - k);
                (r, fl(r) - used)
            });
            let cof = cache.product(exps);
            let term = lk.mul(f.numerator(d - k)).mul_z(&cof).scale(&q(k as i64));
            sum = sum.add(&term);
        }
        numer = numer.sub(&sum.scale(&(q(1) / q(d as i64)))).reduced();
        out.push(LogCoefficient { numer, denom });
    }
    out
}

fn rational_coeffs(p: &ZPoly) -> Vec<Rational> {
    p.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect()
}

/// Expands the log of any ladder series at `w = ∞`; fails with
/// [`Error::RegularityFailure`] at the first x-degree whose coefficient grows
/// faster than `w`.
pub fn expand_log_series(f: &LadderSeries, smax: usize) -> Result<AsymptoticExpansion> {
    let n = f.ladder().n();
    let order = f.order();
    let logs = log_ladder(f);
    let mut mu = XSeries::zero(order);
    let mut mus = vec![XSeries::zero(order); smax + 1];
    for (d, l) in logs.iter().enumerate().skip(1) {
        if l.numer.is_zero() {
            continue;
        }
        let degree = l.numer.degree().unwrap() as i64 - l.denom.degree().unwrap() as i64;
        if degree > 1 {
            return Err(Error::RegularityFailure { n, x_degree: d, degree });
        }
        let num = l.numer.to_poly();
        let exp = laurent_of_quotient(num.coeffs(), &rational_coeffs(&l.denom), -(smax as i64));
        mu.set_coeff(d, exp.coeff(1));
        for (j, mj) in mus.iter_mut().enumerate() {
            mj.set_coeff(d, exp.coeff(-(j as i64)));
        }
    }
    let phi = phis_from_mus(&mus)?;
    Ok(AsymptoticExpansion {
        n,
        x_order: order,
        smax,
        mu,
        mus,
        phi,
    })
}

/// μ, μ_0 … μ_smax and Φ_0 … Φ_smax from log 𝔽 in ℚ(w)[[x]].
pub fn expand_logf(n: u32, x_order: usize, smax: usize) -> Result<AsymptoticExpansion> {
    expand_log_series(&build_f(n, x_order)?.series, smax)
}

fn umul(a: &[Rational], b: &[Rational], t: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); t];
    for (i, x) in a.iter().enumerate().take(t) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(t - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn uinv(a: &[Rational], t: usize) -> Vec<Rational> {
    let c0 = a[0].recip();
    let mut out = vec![c0.clone()];
    for i in 1..t {
        let mut acc = Rational::zero();
        for k in 1..=i.min(a.len() - 1) {
            acc += &a[k] * &out[i - k];
        }
        out.push(-acc * &c0);
    }
    out
}

/// Same output as [`expand_logf`], computed in `u = 1/w`.
///
/// The x^d coefficient of 𝔽 is `w^d φ_d(u)` with
/// `φ_d = n^{nd}/d! · Π_{r=1}^{nd}(1 + ru/n) / Π_{r=1}^{d} ψ_r(u)` and
/// `ψ_r(u) = ((1+ru)^n - 1)/(ru)`. With `y = wx`, `log 𝔽 = Σ λ_d(u) y^d`
/// and the x^d coefficient of log 𝔽 is `w^d λ_d(1/w)`.
pub fn expand_logf_uadic(n: u32, x_order: usize, smax: usize) -> Result<AsymptoticExpansion> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let t = x_order + smax + 1;
    let nq = q(n as i64);
    let mut phis: Vec<Vec<Rational>> = vec![{
        let mut v = vec![Rational::zero(); t];
        v[0] = Rational::one();
        v
    }];
    let mut a = phis[0].clone();
    let mut b = phis[0].clone();
    for d in 1..=x_order {
        for r in (n as usize * (d - 1) + 1)..=(n as usize * d) {
            a = umul(&a, &[q(1), q(r as i64) / &nq], t);
        }
        let psi: Vec<Rational> = (1..=n as i64)
            .map(|k| Rational::from_integer(binomial(n as i64, k) * pow_int(d as i64, k as u32 - 1)))
            .collect();
        b = umul(&b, &psi, t);
        let scale = Rational::new(pow_int(n as i64, n * d as u32), factorial(d as u64));
        let phi: Vec<Rational> = umul(&a, &uinv(&b, t), t).into_iter().map(|c| c * &scale).collect();
        phis.push(phi);
    }
    let mut lam: Vec<Vec<Rational>> = vec![vec![Rational::zero(); t]];
    for d in 1..=x_order {
        let mut acc = phis[d].clone();
        for k in 1..d {
            let prod = umul(&lam[k], &phis[d - k], t);
            let c = q(k as i64) / q(d as i64);
            for (x, y) in acc.iter_mut().zip(prod) {
                *x -= y * &c;
            }
        }
        lam.push(acc);
    }
    let mut mu = XSeries::zero(x_order);
    let mut mus = vec![XSeries::zero(x_order); smax + 1];
    for (d, l) in lam.iter().enumerate().skip(1) {
        if let Some(i) = l.iter().take(d.saturating_sub(1)).position(|c| !c.is_zero()) {
            return Err(Error::RegularityFailure {
                n,
                x_degree: d,
                degree: d as i64 - i as i64,
            });
        }
        mu.set_coeff(d, l[d - 1].clone());
        for (j, mj) in mus.iter_mut().enumerate() {
            mj.set_coeff(d, l[d + j].clone());
        }
    }
    let phi = phis_from_mus(&mus)?;
    Ok(AsymptoticExpansion {
        n,
        x_order,
        smax,
        mu,
        mus,
        phi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mirror::l_series;

    #[test]
    fn mu_first_coefficient_is_n_pow_n_minus_1() {
        let e = expand_logf(5, 2, 1).unwrap();
        assert_eq!(e.mu.coeff(1), &q(625));
    }

    #[test]
    fn both_routes_agree() {
        for n in 1..=4 {
            let a = expand_logf(n, 6, 3).unwrap();
            let b = expand_logf_uadic(n, 6, 3).unwrap();
            assert_eq!(a, b, "n = {n}");
        }
    }

    #[test]
    fn phi0_is_l() {
        let e = expand_logf(3, 6, 1).unwrap();
        assert_eq!(e.phi[0], l_series(3, 6));
    }

    #[test]
    fn perturbed_series_is_irregular() {
        let f = build_f(3, 5).unwrap().series.perturb(4, &ZPoly::from_i64(&[0, 0, 1]));
        assert_eq!(
            expand_log_series(&f, 1),
            Err(Error::RegularityFailure { n: 3, x_degree: 4, degree: 2 })
        );
    }
}
