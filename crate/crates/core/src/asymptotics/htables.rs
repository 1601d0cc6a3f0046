//! The polynomials ℋ_{m,j}(X) and Q_{j,k}(X).

use num_traits::{One, Zero};

use crate::algebra::ring::{binomial, q, Rational};
use crate::algebra::Poly;
use crate::error::{Error, Result};

/// ℋ_{m,j} for `0 <= m <= mmax`, `0 <= j <= mmax` (zero when `j > m`), and
/// Q_{j,k} for `0 <= k <= j <= mmax`.
#[derive(Clone, Debug, PartialEq)]
pub struct HPolyTable {
    pub n: u32,
    pub mmax: usize,
    h: Vec<Vec<Poly<Rational>>>,
    qt: Vec<Vec<Poly<Rational>>>,
}

fn x_minus_one() -> Poly<Rational> {
    Poly::new(vec![q(-1), q(1)])
}

/// `X d/dX`.
fn x_ddx(p: &Poly<Rational>) -> Poly<Rational> {
    p.derivative().shift(1)
}

impl HPolyTable {
    /// ℋ_{m,j}; zero outside `0 <= j <= m`.
    pub fn h(&self, m: usize, j: usize) -> Poly<Rational> {
        if j > m {
            return Poly::zero();
        }
        self.h[m][j].clone()
    }

    /// Q_{j,k}; zero outside `0 <= k <= j`.
    pub fn q(&self, j: usize, k: usize) -> Poly<Rational> {
        if k > j {
            return Poly::zero();
        }
        self.qt[j][k].clone()
    }

    /// Adds the constant `c` to ℋ_{m,j}.
    pub fn perturbed(&self, m: usize, j: usize, c: Rational) -> HPolyTable {
        let mut out = self.clone();
        out.h[m][j] = out.h[m][j].clone() + Poly::constant(c);
        out
    }
}

/// Builds both tables by their recursions and checks the low-`j` closed
/// forms and the reconstruction `ℋ_{m,j} = Σ_{k=1}^{j} C(m, j+k) Q_{j,k}`.
pub fn build_h_tables(n: u32, mmax: usize) -> Result<HPolyTable> {
    let table = compute_h_tables(n, mmax)?;
    check_tables(&table)?;
    Ok(table)
}

/// Both recursions, unchecked.
pub fn compute_h_tables(n: u32, mmax: usize) -> Result<HPolyTable> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let nq = q(n as i64);
    let xm1 = x_minus_one();

    let mut h: Vec<Vec<Poly<Rational>>> = vec![vec![Poly::zero(); mmax + 1]; mmax + 1];
    h[0][0] = Poly::one();
    for m in 1..=mmax {
        for j in 0..=m {
            let mut v = h[m - 1][j].clone();
            if j >= 1 {
                let prev = &h[m - 1][j - 1];
                let shift = q(m as i64 - j as i64) / &nq;
                v = v + xm1.clone() * (x_ddx(prev) + prev.scale(&shift));
            }
            h[m][j] = v;
        }
    }

    let mut qt: Vec<Vec<Poly<Rational>>> = vec![vec![Poly::zero(); mmax + 1]; mmax + 1];
    qt[0][0] = Poly::one();
    for j in 1..=mmax {
        for k in 0..=j {
            let prev = qt[j - 1][k].clone();
            let prev_km1 = if k >= 1 { qt[j - 1][k - 1].clone() } else { Poly::zero() };
            let inner = prev.scale(&q(k as i64)) + prev_km1.scale(&q(k as i64 + j as i64 - 1));
            qt[j][k] = xm1.clone() * (x_ddx(&prev) + inner.scale(&(q(1) / &nq)));
        }
    }

    Ok(HPolyTable { n, mmax, h, qt })
}

/// The closed forms for `j <= 2` and the reconstruction from Q.
pub fn check_tables(t: &HPolyTable) -> Result<()> {
    let nq = q(t.n as i64);
    let xm1 = x_minus_one();
    let bin = |m: usize, k: usize| Rational::from_integer(binomial(m as i64, k as i64));
    for m in 0..=t.mmax {
        let expect0 = Poly::one();
        let expect1 = xm1.scale(&(bin(m, 2) / &nq));
        // ((n+1)X - 1)(X-1) C(m,3)/n² + 3 C(m,4)(X-1)²/n²
        let lin = Poly::new(vec![q(-1), q(t.n as i64 + 1)]);
        let expect2 = (lin * xm1.clone()).scale(&(bin(m, 3) / (&nq * &nq)))
            + (xm1.clone() * xm1.clone()).scale(&(bin(m, 4) * q(3) / (&nq * &nq)));
        for (j, e) in [expect0, expect1, expect2].into_iter().enumerate() {
            if j <= m && t.h(m, j) != e {
                return Err(Error::TableInconsistency(format!(
                    "H_({m},{j}) = {} but the closed form gives {}",
                    t.h(m, j).render("X"),
                    e.render("X")
                )));
            }
        }
        for j in 1..=m {
            let mut rebuilt = Poly::zero();
            for k in 1..=j {
                rebuilt = rebuilt + t.q(j, k).scale(&bin(m, j + k));
            }
            if rebuilt != t.h(m, j) {
                return Err(Error::TableInconsistency(format!(
                    "H_({m},{j}) differs from its Q-expansion"
                )));
            }
        }
    }
    for j in 0..=t.mmax {
        if !t.q(j, 0).is_zero() && j > 0 {
            return Err(Error::TableInconsistency(format!("Q_({j},0) is nonzero")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_build_and_match_closed_forms() {
        for n in 1..=6 {
            let t = build_h_tables(n, 12).unwrap();
            assert_eq!(t.h(2, 1), x_minus_one().scale(&(q(1) / q(n as i64))));
            assert!(t.h(0, 1).is_zero());
            assert_eq!(t.h(7, 0), Poly::one());
        }
    }
}
