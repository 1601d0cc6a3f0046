//! Φ_s from the first-order hierarchy
//! `Σ_{k=1}^{n} L^{1-k} 𝕃_k(Φ_{s+1-k}) = 0`, `Φ_s(0) = δ_{0,s}`.

use num_traits::Zero;

use crate::algebra::linalg::{solve, Solution};
use crate::algebra::ring::{q, Rational};
use crate::error::{Error, Result};

use super::loperators::{build_l_operators, LOperator};
use super::lpoly::LPoly;

/// Number of times the degree bound may be doubled before giving up.
const MAX_DOUBLINGS: u32 = 4;

/// `Σ_{k=2}^{n} L^{1-k} 𝕃_k(Φ_{s+1-k})` for the already known `Φ_0 … Φ_{s-1}`.
fn hierarchy_tail(ops: &[LOperator], phis: &[LPoly], s: usize) -> LPoly {
    let mut acc = LPoly::zero();
    for k in 2..=ops.len() {
        if k > s + 1 {
            break;
        }
        let term = ops[k - 1].apply(&phis[s + 1 - k]);
        acc = acc.add(&term.shift(1 - k as i64));
    }
    acc
}

/// Full residual of the level-`s` equation.
pub fn phi_residual(ops: &[LOperator], phis: &[LPoly], s: usize) -> LPoly {
    ops[0].apply(&phis[s]).add(&hierarchy_tail(ops, phis, s))
}

/// Solves `𝕃_1(Φ) = rhs`, `Φ(1) = init` with `Φ ∈ span{L, …, L^bound}`.
fn solve_level(n: u32, rhs: &LPoly, init: Rational, bound: usize) -> Solution<Rational> {
    // 𝕃_1(L^r) = (r - 1)(L^{n+r} - L^r); rows are exponents, plus one row for Φ(1).
    let lo = rhs.min_exponent().map_or(1, |e| e.min(1));
    let hi = rhs.max_exponent().map_or(0, |e| e).max(bound as i64 + n as i64);
    let rows = (hi - lo + 1) as usize;
    let mut a = vec![vec![Rational::zero(); bound]; rows + 1];
    let mut b = vec![Rational::zero(); rows + 1];
    for r in 1..=bound as i64 {
        let c = q(r - 1);
        a[(r + n as i64 - lo) as usize][r as usize - 1] += &c;
        a[(r - lo) as usize][r as usize - 1] -= &c;
        a[rows][r as usize - 1] = q(1);
    }
    for (e, c) in rhs.terms() {
        b[(e - lo) as usize] = c.clone();
    }
    b[rows] = init;
    solve(&a, &b)
}

/// Φ_0 … Φ_smax in `L ℚ[L]`; each solution is checked against its full
/// equation and its initial condition.
pub fn solve_phi_recursion(n: u32, smax: usize) -> Result<Vec<LPoly>> {
    let ops = build_l_operators(n)?;
    solve_phi_with(&ops, n, smax)
}

pub fn solve_phi_with(ops: &[LOperator], n: u32, smax: usize) -> Result<Vec<LPoly>> {
    let mut phis: Vec<LPoly> = Vec::with_capacity(smax + 1);
    for s in 0..=smax {
        let rhs = hierarchy_tail(ops, &phis, s).scale(&q(-1));
        let init = if s == 0 { q(1) } else { q(0) };
        let start = s * (n as usize - 1) + 1;
        let mut bound = start;
        let mut solved = None;
        for _ in 0..=MAX_DOUBLINGS {
            match solve_level(n, &rhs, init.clone(), bound) {
                Solution::Unique(a) => {
                    solved = Some(LPoly::from_terms(
                        a.into_iter().enumerate().map(|(i, c)| (i as i64 + 1, c)),
                    ));
                    break;
                }
                Solution::Inconsistent { .. } => bound *= 2,
                Solution::Underdetermined { rank } => {
                    return Err(Error::SingularSystem(format!(
                        "Phi_{s} (n = {n}): rank {rank} < {bound}"
                    )))
                }
            }
        }
        let phi = solved.ok_or(Error::DegreeBoundExceeded { n, s, bound })?;
        phis.push(phi);
        let residual = phi_residual(ops, &phis, s);
        if !residual.is_zero() {
            return Err(Error::DegreeBoundExceeded { n, s, bound });
        }
        if phis[s].at_one() != init || !phis[s].in_l_ql() {
            return Err(Error::VerificationFailure {
                check: "phi-recursion".into(),
                n,
                location: format!("s={s}"),
                expected: format!("element of L*Q[L] with value {init} at L=1"),
                actual: phis[s].render(),
            });
        }
    }
    Ok(phis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::qf;

    #[test]
    fn phi1_for_n5() {
        let phis = solve_phi_recursion(5, 1).unwrap();
        assert_eq!(phis[0], LPoly::monomial(q(1), 1));
        assert_eq!(phis[1], LPoly::from_terms([(1, qf(3, 20)), (5, qf(-3, 20))]));
    }

    #[test]
    fn n1_has_only_phi0() {
        let phis = solve_phi_recursion(1, 3).unwrap();
        assert_eq!(phis[0], LPoly::monomial(q(1), 1));
        assert!(phis[1..].iter().all(LPoly::is_zero));
    }

    #[test]
    fn n2_phi1_vanishes() {
        let phis = solve_phi_recursion(2, 2).unwrap();
        assert!(phis[1].is_zero());
    }
}
