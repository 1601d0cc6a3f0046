//! The Φ-hierarchy over ℚ(a) and the denominators of its solutions.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::ring::q;
use crate::algebra::{Poly, RatFunc};
use crate::asymptotics::solve_phi_recursion;
use crate::error::{Error, Result};
use crate::report::{Failure, Report};

use super::operators::{symbolic_l_operators, SymOperator};
use super::ring::{a, is_monomial, rc, SymElem};

fn hierarchy_tail(ops: &[SymOperator], phis: &[SymElem], s: usize) -> SymElem {
    let mut acc = SymElem::zero();
    for k in 2..=s + 1 {
        acc = acc.add(&ops[k - 1].apply(&phis[s + 1 - k]).shift(1 - k as i64));
    }
    acc
}

/// Solves `𝕃_1 Φ = rhs`, `Φ(0) = init`, using
/// `𝕃_1(Λ^i X^j) = (X-1)(i + aj - 1) Λ^i X^j`.
fn solve_level(rhs: &SymElem, init: RatFunc, s: usize) -> Result<SymElem> {
    let t = rhs
        .div_by_x_minus_one()
        .ok_or_else(|| Error::SolveFailure(format!("right-hand side for Phi_{s} is not divisible by X - 1")))?;
    let mut phi = SymElem::zero();
    for ((i, j), c) in t.terms() {
        if *i == 1 && *j == 0 {
            return Err(Error::SolveFailure(format!(
                "Phi_{s}: right-hand side has a Λ(X-1) term, pivot i + a j - 1 vanishes"
            )));
        }
        let pivot = RatFunc::from_poly(Poly::new(vec![q(*i - 1), q(*j as i64)]));
        phi.add_term(*i, *j, c.clone() / &pivot);
    }
    let rest = init - &phi.at_one();
    phi.add_term(1, 0, rest);
    Ok(phi)
}

/// Φ_0 … Φ_smax over ℚ(a); each level's equation is re-checked exactly.
pub fn symbolic_phi(smax: usize) -> Result<Vec<SymElem>> {
    let ops = symbolic_l_operators(smax + 1);
    let mut phis: Vec<SymElem> = Vec::with_capacity(smax + 1);
    for s in 0..=smax {
        let rhs = hierarchy_tail(&ops, &phis, s).scale(&rc(q(-1)));
        let init = if s == 0 { RatFunc::one() } else { RatFunc::zero() };
        let phi = solve_level(&rhs, init, s)?;
        if !ops[0].apply(&phi).sub(&rhs).is_zero() {
            return Err(Error::SolveFailure(format!("Phi_{s}: nonzero residual")));
        }
        phis.push(phi);
    }
    Ok(phis)
}

/// `((a-2)(a+1)/(24a)) (Λ - X)`.
pub fn symbolic_phi1_closed_form() -> SymElem {
    let num = Poly::new(vec![q(-2), q(-1), q(1)]);
    let c = RatFunc::from_poly(num) / &(a() * &rc(q(24)));
    SymElem::from_terms([((1, 0), c.clone()), ((0, 1), -c)])
}

/// Distinct coefficient denominators of Φ_s and whether all are `c·a^k`.
#[derive(Clone, Debug, Serialize)]
pub struct DenominatorReport {
    pub s: usize,
    pub denominators: Vec<String>,
    pub only_powers_of_a: bool,
}

pub fn denominator_report(phis: &[SymElem]) -> Vec<DenominatorReport> {
    phis.iter()
        .enumerate()
        .map(|(s, phi)| {
            let dens = phi.denominators();
            DenominatorReport {
                s,
                only_powers_of_a: dens.iter().all(is_monomial),
                denominators: dens.iter().map(|d| d.render("a")).collect(),
            }
        })
        .collect()
}

/// Specializes the symbolic Φ_s at `a = n` and compares with the numeric
/// hierarchy. The perturbation adds `Λ` to the symbolic Φ_s.
pub fn verify_specialization(n: u32, phis: &[SymElem], perturb: Option<usize>) -> Result<Report> {
    let check = "symbolic";
    let smax = phis.len() - 1;
    let numeric = solve_phi_recursion(n, smax)?;
    for (s, phi) in phis.iter().enumerate() {
        let phi = match perturb {
            Some(p) if p == s => phi.add(&SymElem::monomial(RatFunc::one(), 1, 0)),
            _ => phi.clone(),
        };
        let got = phi
            .specialize(n)
            .ok_or_else(|| Error::SpecializationMismatch(format!("Phi_{s} has a pole at a = {n}")))?;
        if got != numeric[s] {
            return Ok(Report::fail(check, n, smax, Failure::at(format!("s={s}"), &numeric[s], got)));
        }
    }
    Ok(Report::pass(check, n, smax))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi1_closed_form() {
        let phis = symbolic_phi(1).unwrap();
        assert_eq!(phis[0], SymElem::monomial(RatFunc::one(), 1, 0));
        assert_eq!(phis[1], symbolic_phi1_closed_form());
    }

    #[test]
    fn specializes_to_numeric() {
        let phis = symbolic_phi(3).unwrap();
        for n in 3..=5 {
            assert!(verify_specialization(n, &phis, None).unwrap().passed());
        }
        let r = verify_specialization(4, &phis, Some(2)).unwrap();
        assert_eq!(r.first_failure.unwrap().location, "s=2");
    }

    #[test]
    fn low_denominators_are_powers_of_a() {
        let phis = symbolic_phi(3).unwrap();
        assert!(denominator_report(&phis).iter().all(|d| d.only_powers_of_a));
    }
}
