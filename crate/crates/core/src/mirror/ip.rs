//! The series `I_p = 𝔽_p(0, x)` and `H_p = L^p / (I_0 ⋯ I_{p-1})`.

use num_traits::One;

use crate::algebra::ring::{pow_int, q, qf, Rational};
use crate::algebra::series::{binomial_power, XSeries};
use crate::error::Result;

use super::hg::{build_f, iterates};

/// `L = (1 - n^n x)^{-1/n}`.
pub fn l_series(n: u32, order: usize) -> XSeries<Rational> {
    let c = -Rational::from_integer(pow_int(n as i64, n));
    binomial_power(&c, &qf(-1, n as i64), order)
}

/// `(1 - n^n x)^alpha`.
pub fn one_minus_nn_x(n: u32, alpha: i64, order: usize) -> XSeries<Rational> {
    let c = -Rational::from_integer(pow_int(n as i64, n));
    binomial_power(&c, &q(alpha), order)
}

#[derive(Clone, Debug, PartialEq)]
pub struct IpFamily {
    pub n: u32,
    pub order: usize,
    /// `I_0 … I_{n-1}`.
    pub i: Vec<XSeries<Rational>>,
    /// `H_0 … H_n`; the last entry closes the cycle and should equal `H_0`.
    pub h: Vec<XSeries<Rational>>,
}

impl IpFamily {
    /// `I_p` for any `p >= 0`, using `I_{p+n} = I_p`.
    pub fn ip(&self, p: usize) -> &XSeries<Rational> {
        &self.i[p % self.n as usize]
    }
}

/// `H_0 … H_m` from `I_0 … I_{m-1}`.
pub fn h_functions(n: u32, i: &[XSeries<Rational>], order: usize) -> Result<Vec<XSeries<Rational>>> {
    let l = l_series(n, order);
    let mut h = vec![XSeries::one(order)];
    let mut lp = XSeries::one(order);
    let mut prod = XSeries::one(order);
    for ip in i {
        lp = lp.mul(&l)?;
        prod = prod.mul(ip)?;
        h.push(lp.div(&prod)?);
    }
    Ok(h)
}

pub fn compute_ip_family(n: u32, order: usize) -> Result<IpFamily> {
    let f = build_f(n, order)?;
    let i: Vec<_> = iterates(&f, n as usize)?
        .iter()
        .map(|fp| fp.series.at_w_zero())
        .collect();
    let h = h_functions(n, &i, order)?;
    Ok(IpFamily { n, order, i, h })
}

/// `Σ_d (nd)! / (d!)^n x^d`, the value of 𝔽 at `w = 0` computed directly.
pub fn i0_closed_form(n: u32, order: usize) -> XSeries<Rational> {
    let mut c = Rational::one();
    XSeries::from_fn(order, |d| {
        if d > 0 {
            let nd = n as i64 * d as i64;
            for r in (nd - n as i64 + 1)..=nd {
                c *= q(r);
            }
            c /= Rational::from_integer(pow_int(d as i64, n));
        }
        c.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i0_for_n5_starts_with_120() {
        let fam = compute_ip_family(5, 2).unwrap();
        assert_eq!(fam.i[0].coeff(1), &q(120));
        assert_eq!(fam.i[0], i0_closed_form(5, 2));
    }

    #[test]
    fn n3_product_has_x_coefficient_27() {
        let fam = compute_ip_family(3, 3).unwrap();
        let prod = fam.i.iter().fold(XSeries::one(3), |a, b| a.mul(b).unwrap());
        assert_eq!(prod.coeff(1), &q(27));
        assert!(fam.h[0].coeffs().iter().skip(1).all(|c| c == &q(0)));
    }

    #[test]
    fn n1_i0_is_geometric() {
        let fam = compute_ip_family(1, 6).unwrap();
        assert!(fam.i[0].coeffs().iter().all(|c| c == &q(1)));
    }
}
