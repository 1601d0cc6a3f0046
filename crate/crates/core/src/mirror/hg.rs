//! The hypergeometric series 𝔽, 𝔽₋₁, 𝔽̂₀ and the map 𝕄.

use std::fmt;

use crate::algebra::series::XSeries;
use crate::algebra::zpoly::{QPoly, ZPoly};
use crate::algebra::RatFunc;
use crate::error::{Error, Result};

use super::ladder::{Ladder, LadderKind, LadderSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// 𝔽 itself.
    F,
    /// `w D_w⁻¹ 𝔽`.
    Fminus1,
    /// The companion series with denominators `(w + r)^n`.
    FhatZero,
    /// `𝕄^p 𝔽`.
    Fp(u32),
    /// `𝕄^p 𝔽̂₀`.
    FhatP(u32),
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::F => write!(f, "F"),
            SeriesKind::Fminus1 => write!(f, "F_-1"),
            SeriesKind::FhatZero => write!(f, "Fhat_0"),
            SeriesKind::Fp(p) => write!(f, "F_{p}"),
            SeriesKind::FhatP(p) => write!(f, "Fhat_{p}"),
        }
    }
}

/// A member of 𝒫 built from the hypergeometric data for a fixed `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct HgSeries {
    pub n: u32,
    pub kind: SeriesKind,
    pub series: LadderSeries,
}

impl HgSeries {
    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeff(&self, d: usize) -> RatFunc {
        self.series.coeff(d)
    }

    pub fn to_xseries(&self) -> XSeries<RatFunc> {
        self.series.to_xseries()
    }

    /// Adds `w` to the x^d coefficient (a negative control that keeps the
    /// value at `w = 0`).
    pub fn perturbed(&self, d: usize) -> HgSeries {
        self.perturbed_by(d, &ZPoly::linear(1, 0))
    }

    /// Adds `delta(w)` to the x^d coefficient.
    pub fn perturbed_by(&self, d: usize, delta: &ZPoly) -> HgSeries {
        HgSeries {
            series: self.series.perturb(d, delta),
            ..self.clone()
        }
    }
}

/// Numerators `Π_{r=lo}^{n d + hi} (n w + r)` for `d = 0..=order`, the
/// product over an empty range being 1.
fn factorial_numerators(n: u32, order: usize, start: i64, end_offset: i64) -> Vec<QPoly> {
    let nn = n as i64;
    let mut acc = ZPoly::one();
    let mut next = start;
    let mut out = Vec::with_capacity(order + 1);
    for d in 0..=order as i64 {
        let end = nn * d + end_offset;
        while next <= end {
            acc = acc.mul(&ZPoly::linear(nn, next));
            next += 1;
        }
        out.push(QPoly::from_zpoly(acc.clone()));
    }
    out
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidInput("n must be a positive integer".into()))
    } else {
        Ok(())
    }
}

/// `𝔽 = Σ x^d Π_{r=1}^{nd}(nw + r) / Π_{r=1}^{d}((w + r)^n - w^n)`.
pub fn build_f(n: u32, order: usize) -> Result<HgSeries> {
    check_n(n)?;
    let ladder = Ladder::new(n, LadderKind::Difference, order);
    Ok(HgSeries {
        n,
        kind: SeriesKind::F,
        series: LadderSeries::new(ladder, factorial_numerators(n, order, 1, 0)),
    })
}

/// `𝔽₋₁ = Σ x^d Π_{r=0}^{nd-1}(nw + r) / Π_{r=1}^{d}((w + r)^n - w^n)`.
pub fn build_fminus1(n: u32, order: usize) -> Result<HgSeries> {
    check_n(n)?;
    let ladder = Ladder::new(n, LadderKind::Difference, order);
    Ok(HgSeries {
        n,
        kind: SeriesKind::Fminus1,
        series: LadderSeries::new(ladder, factorial_numerators(n, order, 0, -1)),
    })
}

/// `𝔽̂₀ = Σ x^d Π_{r=1}^{nd}(nw + r) / Π_{r=1}^{d}(w + r)^n`.
pub fn build_fhat_zero(n: u32, order: usize) -> Result<HgSeries> {
    check_n(n)?;
    let ladder = Ladder::new(n, LadderKind::Power, order);
    Ok(HgSeries {
        n,
        kind: SeriesKind::FhatZero,
        series: LadderSeries::new(ladder, factorial_numerators(n, order, 1, 0)),
    })
}

/// `𝕄F = w⁻¹ D_w [F / F(0, x)]`, checking 𝒫-membership on both sides.
pub fn apply_m(f: &HgSeries) -> Result<HgSeries> {
    if !f.series.is_in_p() {
        return Err(Error::NotInP(format!("{} has constant term other than 1", f.kind)));
    }
    let series = f.series.apply_m()?;
    if !series.is_in_p() {
        return Err(Error::NotInP(format!("M({}) has constant term other than 1", f.kind)));
    }
    let kind = match f.kind {
        SeriesKind::F => SeriesKind::Fp(1),
        SeriesKind::Fp(p) => SeriesKind::Fp(p + 1),
        SeriesKind::Fminus1 => SeriesKind::F,
        SeriesKind::FhatZero => SeriesKind::FhatP(1),
        SeriesKind::FhatP(p) => SeriesKind::FhatP(p + 1),
    };
    Ok(HgSeries {
        n: f.n,
        kind,
        series,
    })
}

/// `[f, 𝕄f, 𝕄²f, …]`, `count` entries in total.
pub fn iterates(f: &HgSeries, count: usize) -> Result<Vec<HgSeries>> {
    let mut out = vec![f.clone()];
    while out.len() < count {
        let next = apply_m(out.last().unwrap())?;
        out.push(next);
    }
    out.truncate(count);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::q;
    use crate::algebra::Poly;

    #[test]
    fn n2_first_coefficient_is_2w_plus_2() {
        // (2w+1)(2w+2) / ((w+1)^2 - w^2) = 2w + 2
        let f = build_f(2, 1).unwrap();
        assert_eq!(f.coeff(1), RatFunc::from_poly(Poly::new(vec![q(2), q(2)])));
        assert_eq!(f.coeff(0), RatFunc::constant(q(1)));
    }

    #[test]
    fn n2_m_of_f_first_coefficient() {
        // F / I_0 = 1 + 2w x + O(x^2), so M F = 1 + (w+1)/w * 2w x = 1 + (2w+2) x
        let f = build_f(2, 1).unwrap();
        let m = apply_m(&f).unwrap();
        assert_eq!(m.coeff(1), RatFunc::from_poly(Poly::new(vec![q(2), q(2)])));
        assert_eq!(m.kind, SeriesKind::Fp(1));
    }

    #[test]
    fn fminus1_maps_to_f() {
        for n in 1..=4 {
            let fm = build_fminus1(n, 5).unwrap();
            let via_dw = fm.series.apply_dw();
            let f = build_f(n, 5).unwrap();
            // w⁻¹ D_w 𝔽₋₁ = 𝔽
            assert_eq!(via_dw, f.series.mul_wpoly(&ZPoly::linear(1, 0)));
        }
    }

    #[test]
    fn order_zero_is_one() {
        let f = build_f(7, 0).unwrap();
        assert_eq!(f.to_xseries(), XSeries::one(0));
    }

    #[test]
    fn n1_is_fixed_by_m() {
        let f = build_f(1, 8).unwrap();
        assert_eq!(apply_m(&f).unwrap().series, f.series);
    }

    #[test]
    fn zero_n_is_rejected() {
        assert!(matches!(build_f(0, 3), Err(Error::InvalidInput(_))));
    }
}
