//! Checks on the expansion at `w = ∞`: regularity of log 𝔽, the closed
//! forms for μ, Φ_0, Φ_1, Φ_2, Φ_3, agreement of the two routes to Φ_s, the
//! ℋ/𝕃 tables, the renormalized table of Φ_s for n = 3, 4, 5 and the
//! quadratic identity among the H_p.
//!
//! As in the mirror checks, `perturb` injects a single-coefficient error
//! whose location the failing report names.

use crate::algebra::ring::{q, qf, Rational};
use crate::algebra::series::XSeries;
use crate::algebra::zpoly::ZPoly;
use crate::error::{Error, Result};
use crate::mirror::verify::compare_series;
use crate::mirror::{build_f, compute_ip_family, l_series};
use crate::report::{combine, Failure, Report};

use super::expand::{expand_log_series, AsymptoticExpansion};
use super::htables::{check_tables, compute_h_tables};
use super::loperators::{check_low_operators, l_operators_from_table};
use super::lpoly::LPoly;
use super::phi::solve_phi_recursion;

fn require_n(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        Err(Error::InvalidInput(format!("{what} requires n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

fn compare_lpoly(check: &str, n: u32, order: usize, label: &str, expected: &LPoly, actual: &LPoly) -> Report {
    if expected == actual {
        Report::pass(check, n, order)
    } else {
        Report::fail(check, n, order, Failure::at(label, expected, actual))
    }
}

/// 𝔽 (or 𝔽 with `w²` added at x^d) expanded at `w = ∞`.
fn expansion(n: u32, order: usize, smax: usize, perturb: Option<usize>) -> Result<AsymptoticExpansion> {
    let mut f = build_f(n, order)?.series;
    if let Some(d) = perturb {
        f = f.perturb(d, &ZPoly::from_i64(&[0, 0, 1]));
    }
    expand_log_series(&f, smax)
}

/// No x-coefficient of log 𝔽 grows faster than `w` at infinity. The
/// perturbation adds `w²` to the x^d coefficient of 𝔽.
pub fn verify_regularity(n: u32, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 1, "regularity")?;
    let check = "regularity";
    match expansion(n, order, 0, perturb) {
        Ok(_) => Ok(Report::pass(check, n, order)),
        Err(Error::RegularityFailure { x_degree, degree, .. }) => Ok(Report::fail(
            check,
            n,
            order,
            Failure::at_degree(x_degree, format!("log F x^{x_degree}"), "w-degree <= 1", format!("w-degree {degree}")),
        )),
        Err(e) => Err(e),
    }
}

/// `(n-2)(n+1)/(24n) (L - Lⁿ)`.
pub fn phi1_closed_form(n: u32) -> LPoly {
    let c = phi1_constant(n);
    LPoly::from_terms([(1, c.clone()), (n as i64, -c)])
}

fn phi1_constant(n: u32) -> Rational {
    let n = n as i64;
    qf((n - 2) * (n + 1), 24 * n)
}

/// `Dμ = L - 1`, `Φ_0 = L` and the closed form of Φ_1, all from the direct
/// expansion. The perturbation multiplies 𝔽 by `1 + x^d`, which shifts
/// log Φ_0 at x^d.
pub fn verify_closed_forms(n: u32, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 1, "closed forms")?;
    let check = "closed-forms";
    let mut f = build_f(n, order)?.series;
    if let Some(d) = perturb {
        f = f.mul_qseries(&XSeries::one(order).add(&XSeries::monomial(order, q(1), d))?)?;
    }
    let e = expand_log_series(&f, 1)?;
    let l = l_series(n, order);
    let l_minus_one = l.sub(&XSeries::one(order))?;
    let parts = vec![
        compare_series(check, n, "D mu = L - 1:", &l_minus_one, &e.mu.apply_d()),
        compare_series(check, n, "Phi_0 = L:", &l, &e.phi[0]),
        compare_series(check, n, "Phi_1:", &phi1_closed_form(n).to_xseries(n, order)?, &e.phi[1]),
    ];
    Ok(combine(check, n, order, parts))
}

/// `(n+1)²(n-2)²/(2(24n)²) (L - 2Lⁿ + L^{2n-1})`.
pub fn phi2_closed_form(n: u32) -> LPoly {
    let c = phi1_constant(n);
    let n = n as i64;
    let c = &c * &c / q(2);
    LPoly::from_terms([(1, c.clone()), (n, c.clone() * q(-2)), (2 * n - 1, c)])
}

/// The five-term closed form of Φ_3.
pub fn phi3_closed_form(n: u32) -> LPoly {
    let m = n as i64;
    let pre = qf((m + 1) * (m - 2), 30 * (24 * m).pow(3));
    let t1 = 1003 * m.pow(4) - 2366 * m.pow(3) + 3759 * m * m - 1676 * m - 164;
    let t2 = -72 * (m - 1) * (3 * m - 1) * (7 * m * m - 9 * m + 14);
    let t3 = 15 * (m + 1).pow(2) * (m - 2).pow(2);
    let t4 = 72 * (m - 1) * (7 * m.pow(3) - 17 * m * m + 22 * m - 24);
    let t5 = 5 * m.pow(4) + 134 * m.pow(3) - 447 * m * m + 308 * m - 556;
    LPoly::from_terms(
        [
            (3 * m - 2, t1),
            (2 * m - 2, t2),
            (2 * m - 1, t3),
            (m, -t3),
            (m - 2, t4),
            (1, t5),
        ]
        .map(|(r, c)| (r, q(c) * &pre)),
    )
}

/// Solves the Φ-hierarchy for `s <= smax`, checks Φ_1, Φ_2 (also as
/// `Φ_1²/(2Φ_0)`) and Φ_3 against their closed forms, and compares every
/// Φ_s with the direct expansion mod `x^{order+1}`. The perturbation adds
/// `x^d` to the directly expanded Φ_1.
pub fn verify_phi_recursion(n: u32, smax: usize, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 1, "phi recursion")?;
    let check = "phi-recursion";
    let phis = solve_phi_recursion(n, smax)?;
    let mut parts = Vec::new();
    if smax >= 1 {
        parts.push(compare_lpoly(check, n, order, "Phi_1", &phi1_closed_form(n), &phis[1]));
    }
    if smax >= 2 {
        parts.push(compare_lpoly(check, n, order, "Phi_2", &phi2_closed_form(n), &phis[2]));
        // Φ_0 = L, so Φ_1²/(2Φ_0) is a shift by L^{-1}.
        let ratio = phis[1].mul(&phis[1]).shift(-1).scale(&qf(1, 2));
        parts.push(compare_lpoly(check, n, order, "Phi_1^2/(2 Phi_0)", &ratio, &phis[2]));
    }
    if smax >= 3 {
        parts.push(compare_lpoly(check, n, order, "Phi_3", &phi3_closed_form(n), &phis[3]));
    }
    parts.push(cross_check_phi_with(n, order, &phis, perturb)?);
    let degrees: Vec<String> = phis
        .iter()
        .map(|p| p.max_exponent().map_or("-".into(), |d| d.to_string()))
        .collect();
    Ok(combine(check, n, order, parts).with_note(format!("deg_L Phi_s = {}", degrees.join(","))))
}

/// Φ_s from the hierarchy, substituted as power series, against the direct
/// expansion of log 𝔽.
pub fn cross_check_phi(n: u32, order: usize, smax: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 1, "cross check")?;
    let phis = solve_phi_recursion(n, smax)?;
    cross_check_phi_with(n, order, &phis, perturb)
}

fn cross_check_phi_with(n: u32, order: usize, phis: &[LPoly], perturb: Option<usize>) -> Result<Report> {
    let check = "phi-cross-check";
    let smax = phis.len() - 1;
    let mut e = expansion(n, order, smax, None)?;
    if let (Some(d), true) = (perturb, smax >= 1) {
        if d <= order {
            let c = e.phi[1].coeff(d) + q(1);
            e.phi[1].set_coeff(d, c);
        }
    }
    for (s, p) in phis.iter().enumerate() {
        let label = format!("Phi_{s}:");
        let r = compare_series(check, n, &label, &p.to_xseries(n, order)?, &e.phi[s]);
        if !r.passed() {
            return Ok(r);
        }
    }
    Ok(Report::pass(check, n, order))
}

/// The ℋ and Q tables up to `m = mmax` (closed forms, reconstruction) and
/// the closed forms of 𝕃_1, 𝕃_2. The perturbation adds 1 to ℋ_{m,1}.
pub fn verify_operators(n: u32, mmax: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 1, "operators")?;
    let check = "operators";
    let mut t = compute_h_tables(n, mmax.max(n as usize))?;
    if let Some(m) = perturb {
        if (1..=t.mmax).contains(&m) {
            t = t.perturbed(m, 1, q(1));
        }
    }
    let fail = |e: Error| match e {
        Error::TableInconsistency(msg) => Ok(Report::fail(check, n, mmax, Failure::at("tables", "consistent", msg))),
        other => Err(other),
    };
    if let Err(e) = check_tables(&t) {
        return fail(e);
    }
    let ops = l_operators_from_table(&t);
    if let Err(e) = check_low_operators(n, &ops) {
        return fail(e);
    }
    Ok(Report::pass(check, n, mmax))
}

/// `(correction scale, [(exponent, coefficient)])` of the renormalized
/// Φ_3, Φ_4 for `n = 3, 4, 5`.
fn table_corrections(n: u32) -> Option<[(Rational, Vec<(i64, i64)>); 2]> {
    Some(match n {
        3 => [
            (q(144), vec![(0, 1), (3, -5), (6, 4)]),
            (q(576), vec![(0, 1), (2, -94), (3, -5), (5, 245), (6, 4), (8, -151)]),
        ],
        4 => [
            (qf(36, 25), vec![(0, 4), (1, 72), (5, -297), (9, 221)]),
            (
                qf(144, 125),
                vec![(0, 884), (1, 360), (3, -20), (4, -19584), (5, -1485), (8, 44253), (9, 1105), (12, -25513)],
            ),
        ],
        5 => [
            (qf(32, 45), vec![(0, 7), (2, 134), (7, -504), (12, 363)]),
            (
                qf(16, 135),
                vec![
                    (0, 168),
                    (1, 8576),
                    (2, 3216),
                    (4, -168),
                    (6, -127568),
                    (7, -12096),
                    (11, 270144),
                    (12, 8712),
                    (16, -150984),
                ],
            ),
        ],
        _ => return None,
    })
}

/// Tabulated `s! (24n/((n-2)(n+1)))^s Φ_s / L` for `s = 1..4`.
pub fn phi_table_entries(n: u32) -> Result<Vec<LPoly>> {
    let corr = table_corrections(n)
        .ok_or_else(|| Error::InvalidInput(format!("the renormalized table covers n = 3, 4, 5, got {n}")))?;
    let base = LPoly::from_terms([(0, q(1)), (n as i64 - 1, q(-1))]);
    let mut out = vec![base.clone(), base.pow(2)];
    for (s, (scale, terms)) in corr.into_iter().enumerate() {
        let c = LPoly::from_terms(terms.into_iter().map(|(r, c)| (r, q(c)))).scale(&scale);
        out.push(base.pow(s as u32 + 3).add(&c));
    }
    Ok(out)
}

/// Reproduces the renormalized table of Φ_1 … Φ_4 for `n ∈ {3, 4, 5}`.
/// The perturbation adds `L` to Φ_s.
pub fn verify_phi_table(n: u32, perturb: Option<usize>) -> Result<Report> {
    let check = "table";
    let expected = phi_table_entries(n)?;
    let mut phis = solve_phi_recursion(n, 4)?;
    if let Some(s) = perturb {
        if (1..=4).contains(&s) {
            phis[s] = phis[s].add(&LPoly::monomial(q(1), 1));
        }
    }
    let inv = q(1) / phi1_constant(n);
    let mut parts = Vec::new();
    let mut factor = q(1);
    for s in 1..=4 {
        factor = factor * q(s as i64) * &inv;
        let got = phis[s].shift(-1).scale(&factor);
        parts.push(compare_lpoly(check, n, 4, &format!("s={s}"), &expected[s - 1], &got));
    }
    Ok(combine(check, n, 4, parts))
}

/// `(1/2L) Σ_p (H_p'/H_p)² = -((n+1)(n-2)/24 L^{n-1} + (1/L) Σ_p p H_p'/H_p)'`
/// with `' = D`. The perturbation adds `x^d` to H_1.
pub fn verify_h_quadratic(n: u32, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 2, "H_p identity")?;
    let check = "h-quadratic";
    let fam = compute_ip_family(n, order)?;
    let mut h = fam.h.clone();
    if let Some(d) = perturb {
        if d <= order {
            let c = h[1].coeff(d) + q(1);
            h[1].set_coeff(d, c);
        }
    }
    let l = l_series(n, order);
    let l_inv = l.inverse()?;
    let mut squares = XSeries::zero(order);
    let mut weighted = XSeries::zero(order);
    for (p, hp) in h.iter().take(n as usize).enumerate() {
        let logd = hp.apply_d().div(hp)?;
        squares = squares.add(&logd.mul(&logd)?)?;
        weighted = weighted.add(&logd.scale(&q(p as i64)))?;
    }
    let lhs = squares.mul(&l_inv)?.scale(&qf(1, 2));
    let inner = l
        .powi(n as i32 - 1)?
        .scale(&qf((n as i64 + 1) * (n as i64 - 2), 24))
        .add(&weighted.mul(&l_inv)?)?;
    let rhs = inner.apply_d().neg();
    Ok(compare_series(check, n, "LHS vs RHS:", &rhs, &lhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi3_closed_form_at_n3_is_table_entry() {
        let t = phi_table_entries(3).unwrap();
        let c = phi1_constant(3);
        let scaled = phi3_closed_form(3).shift(-1).scale(&(q(6) / (&c * &c * &c)));
        assert_eq!(scaled, t[2]);
    }

    #[test]
    fn small_checks_pass() {
        assert!(verify_regularity(3, 6, None).unwrap().passed());
        assert!(verify_closed_forms(4, 6, None).unwrap().passed());
        assert!(verify_phi_recursion(3, 3, 6, None).unwrap().passed());
        assert!(verify_operators(5, 12, None).unwrap().passed());
        assert!(verify_phi_table(3, None).unwrap().passed());
        assert!(verify_h_quadratic(3, 8, None).unwrap().passed());
    }

    #[test]
    fn perturbations_are_located() {
        assert_eq!(verify_regularity(3, 6, Some(4)).unwrap().failure_degree(), Some(4));
        assert_eq!(verify_closed_forms(3, 6, Some(3)).unwrap().failure_degree(), Some(3));
        assert!(verify_closed_forms(3, 6, None).unwrap().passed());
        assert_eq!(verify_phi_recursion(3, 2, 6, Some(5)).unwrap().failure_degree(), Some(5));
        assert_eq!(verify_h_quadratic(3, 8, Some(6)).unwrap().failure_degree(), Some(6));
        let t = verify_phi_table(4, Some(2)).unwrap();
        assert!(t.first_failure.unwrap().location.contains("s=2"));
        let o = verify_operators(4, 8, Some(3)).unwrap();
        assert!(!o.passed());
    }

    #[test]
    fn phi_table_rejects_n2() {
        assert!(matches!(verify_phi_table(2, None), Err(Error::InvalidInput(_))));
    }
}
