//! Checks of periodicity, the I_p identities, the Picard–Fuchs equations,
//! the descent coefficients and the congruence with 𝔽̂.
//!
//! Every verifier takes an optional x-degree at which its input is perturbed;
//! with a perturbation the report is expected to fail at that degree.

use crate::algebra::ring::{binomial, pow_int, q, Rational};
use crate::algebra::series::XSeries;
use crate::algebra::stirling::elementary_symmetric;
use crate::algebra::zpoly::ZPoly;
use crate::error::{Error, Result};
use crate::report::{combine, Failure, Report};

use super::hg::{build_f, build_fhat_zero, build_fminus1, iterates, HgSeries};
use super::ip::{compute_ip_family, one_minus_nn_x};
use super::ladder::LadderSeries;

/// Compares two ℚ-series and reports the first differing degree.
pub fn compare_series(
    check: &str,
    n: u32,
    label: &str,
    expected: &XSeries<Rational>,
    actual: &XSeries<Rational>,
) -> Report {
    match expected.first_difference(actual) {
        None => Report::pass(check, n, expected.order()),
        Some(d) => Report::fail(
            check,
            n,
            expected.order(),
            Failure::at_degree(d, format!("{label} x^{d}"), expected.coeff(d), actual.coeff(d)),
        ),
    }
}

fn compare_ladder(check: &str, n: u32, label: &str, expected: &LadderSeries, actual: &LadderSeries) -> Report {
    match expected.first_difference(actual) {
        None => Report::pass(check, n, expected.order()),
        Some(d) => Report::fail(
            check,
            n,
            expected.order(),
            Failure::at_degree(d, format!("{label} x^{d}"), expected.coeff(d), actual.coeff(d)),
        ),
    }
}

fn zero_residual(check: &str, n: u32, label: &str, residual: &LadderSeries) -> Report {
    let zero = LadderSeries::zero(residual.ladder().clone());
    compare_ladder(check, n, label, &zero, residual)
}

fn require_n(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        Err(Error::InvalidInput(format!("{what} requires n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// `𝕄ⁿ𝔽 = 𝔽` mod `x^{order+1}`; also records the smallest `k` with `𝕄^k𝔽 = 𝔽`.
pub fn verify_periodicity(n: u32, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 1, "periodicity")?;
    let mut f = build_f(n, order)?;
    if let Some(d) = perturb {
        f = f.perturbed(d);
    }
    let its = iterates(&f, n as usize + 1)?;
    let check = "periodicity";
    let report = compare_ladder(check, n, "M^n F vs F:", &f.series, &its[n as usize].series);
    if !report.passed() {
        return Ok(report);
    }
    let period = (1..=n as usize).find(|&k| its[k].series == f.series).unwrap();
    Ok(report.with_note(format!("minimal period {period}")))
}

/// `Π I_p = (1 - nⁿx)⁻¹`, `(Π I_p^{n-1-p})² (1 - nⁿx)^{n-1} = 1`, and
/// `I_p = I_{n-1-p}`.
pub fn verify_i_identities(n: u32, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 1, "I-identities")?;
    let mut fam = compute_ip_family(n, order)?;
    if let Some(d) = perturb.filter(|&d| d <= order) {
        let c = fam.i[0].coeff(d) + q(1);
        fam.i[0].set_coeff(d, c);
    }
    let one = XSeries::one(order);
    let prod = fam.i.iter().try_fold(one.clone(), |a, b| a.mul(b))?;
    let product = compare_series("product", n, "I_0...I_{n-1}", &one_minus_nn_x(n, -1, order), &prod);

    let mut weighted = one.clone();
    for (p, ip) in fam.i.iter().enumerate() {
        weighted = weighted.mul(&ip.pow(n - 1 - p as u32))?;
    }
    let squared = weighted.pow(2).mul(&one_minus_nn_x(n, n as i64 - 1, order))?;
    let weighted_report = compare_series("weighted-product", n, "squared form", &one, &squared);

    let mut symmetry = Vec::new();
    for p in 0..n as usize {
        let r = n as usize - 1 - p;
        symmetry.push(compare_series(
            "symmetry",
            n,
            &format!("I_{p} vs I_{r}"),
            &fam.i[r],
            &fam.i[p],
        ));
    }
    let mut parts = vec![product, weighted_report];
    parts.extend(symmetry);
    Ok(combine("I-identities", n, order, parts))
}

/// `Π_{j} (n D_w + j)` over the given `j`.
fn apply_hg_product(f: &LadderSeries, n: u32, js: impl Iterator<Item = i64>) -> LadderSeries {
    let mut g = f.clone();
    for j in js {
        g = g
            .apply_dw()
            .scale(&q(n as i64))
            .add(&g.scale(&q(j)))
            .expect("same ladder");
    }
    g
}

fn dw_power(f: &LadderSeries, k: u32) -> LadderSeries {
    (0..k).fold(f.clone(), |g, _| g.apply_dw())
}

fn w_power(k: u32) -> ZPoly {
    ZPoly::linear(1, 0).pow(k)
}

/// `(D_wⁿ - x Π_{j=0}^{n-1}(n D_w + j) - wⁿ) 𝔽₋₁`.
pub fn picard_fuchs_residual(fm1: &HgSeries) -> LadderSeries {
    let n = fm1.n;
    let f = &fm1.series;
    let hg = apply_hg_product(f, n, 0..n as i64).shift_x();
    dw_power(f, n)
        .sub(&hg)
        .and_then(|r| r.sub(&f.mul_wpoly(&w_power(n))))
        .expect("same ladder")
}

/// `(D_w^{n-1} - n x Π_{j=1}^{n-1}(n D_w + j)) 𝔽̂₀ - w^{n-1}`.
pub fn hat_picard_fuchs_residual(fhat: &HgSeries) -> Result<LadderSeries> {
    let n = fhat.n;
    let f = &fhat.series;
    let hg = apply_hg_product(f, n, 1..n as i64).shift_x().scale(&q(n as i64));
    let one = LadderSeries::from_qseries(f.ladder().clone(), &XSeries::one(f.order()))?;
    dw_power(f, n - 1)
        .sub(&hg)?
        .sub(&one.mul_wpoly(&w_power(n - 1)))
}

/// Both Picard–Fuchs residuals vanish (the 𝔽̂₀ equation only for `n >= 2`).
pub fn verify_picard_fuchs(n: u32, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 1, "Picard-Fuchs")?;
    let mut fm1 = build_fminus1(n, order)?;
    let mut fhat = build_fhat_zero(n, order)?;
    if let Some(d) = perturb {
        fm1 = fm1.perturbed(d);
        fhat = fhat.perturbed(d);
    }
    let mut parts = vec![zero_residual("F_-1 equation", n, "residual", &picard_fuchs_residual(&fm1))];
    if n >= 2 {
        parts.push(zero_residual(
            "Fhat_0 equation",
            n,
            "residual",
            &hat_picard_fuchs_residual(&fhat)?,
        ));
    }
    Ok(combine("picard-fuchs", n, order, parts))
}

/// Coefficients `C_0^{(p)} … C_{n-1-p}^{(p)}` of the level-`p` equation.
#[derive(Clone, Debug, PartialEq)]
pub struct DescentState {
    pub n: u32,
    pub p: u32,
    pub coeffs: Vec<XSeries<Rational>>,
}

/// Initial coefficients `C_1 … C_n` of the 𝔽₋₁ equation, written as
/// `C_s^{(0)} = C_{s+1}`.
fn initial_descent(n: u32, order: usize) -> Vec<XSeries<Rational>> {
    let s = elementary_symmetric(n - 1);
    let nn = pow_int(n as i64, n);
    (0..n as usize)
        .map(|idx| {
            let r = idx + 1;
            if r == n as usize {
                XSeries::new(order, vec![q(1), Rational::from_integer(-nn.clone())])
            } else {
                let c = -pow_int(n as i64, r as u32) * &s[n as usize - r];
                XSeries::monomial(order, Rational::from_integer(c), 1)
            }
        })
        .collect()
}

/// `C^{(p)}_s = Σ_{r=s+1}^{n-p} C(r, s+1) C^{(p-1)}_r D^{r-1-s} I_{p-1}`.
pub fn descend_c(n: u32, i: &[XSeries<Rational>], order: usize) -> Result<Vec<DescentState>> {
    require_n(n, 2, "descent")?;
    let mut states = vec![DescentState {
        n,
        p: 0,
        coeffs: initial_descent(n, order),
    }];
    for p in 1..n {
        let prev = &states.last().unwrap().coeffs;
        let ip = &i[p as usize - 1];
        let top = (n - p) as usize;
        let mut dpow = vec![ip.clone()];
        for _ in 1..=top {
            dpow.push(dpow.last().unwrap().apply_d());
        }
        let mut coeffs = Vec::with_capacity(top);
        for s in 0..top {
            let mut acc = XSeries::zero(order);
            for r in s + 1..=top {
                let c = Rational::from_integer(binomial(r as i64, s as i64 + 1));
                acc = acc.add(&prev[r].mul(&dpow[r - 1 - s])?.scale(&c))?;
            }
            coeffs.push(acc);
        }
        states.push(DescentState { n, p, coeffs });
    }
    Ok(states)
}

/// Descent coefficients against their closed forms, the full level-`p`
/// equations `Σ_s C_s^{(p)} D_w^s 𝔽_p = w^{n-p-1} 𝔽₋₁`, and
/// `(1 - nⁿx) Π_{r<=n-2} I_r 𝔽_{n-1} = 𝔽₋₁`.
pub fn verify_descent(n: u32, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 2, "descent")?;
    let f = build_f(n, order)?;
    let fps = iterates(&f, n as usize)?;
    let i: Vec<_> = fps.iter().map(|fp| fp.series.at_w_zero()).collect();
    let mut fm1 = build_fminus1(n, order)?;
    if let Some(d) = perturb {
        fm1 = fm1.perturbed(d);
    }
    let states = descend_c(n, &i, order)?;
    let base = one_minus_nn_x(n, 1, order);
    let nn = Rational::from_integer(pow_int(n as i64, n));
    let x = XSeries::monomial(order, q(1), 1);
    let mut parts = Vec::new();

    let mut prod = XSeries::one(order);
    let mut log_sum = XSeries::zero(order);
    for st in &states {
        let p = st.p as usize;
        let label = format!("p={p}");
        let top = base.mul(&prod)?;
        parts.push(compare_series("top coefficient", n, &label, &top, &st.coeffs[n as usize - 1 - p]));
        if p + 2 <= n as usize {
            let lead = x.scale(&(-nn.clone() * q(n as i64 - 1) / q(2)));
            let second = lead.add(&base.mul(&log_sum)?)?.mul(&prod)?;
            parts.push(compare_series(
                "second coefficient",
                n,
                &label,
                &second,
                &st.coeffs[n as usize - 2 - p],
            ));
        }
        if p + 1 < n as usize {
            prod = prod.mul(&i[p])?;
            let dlog = i[p].apply_d().div(&i[p])?;
            log_sum = log_sum.add(&dlog.scale(&q(n as i64 - p as i64 - 1)))?;
        }

        let mut lhs = LadderSeries::zero(fm1.series.ladder().clone());
        let mut dws = fps[p].series.clone();
        for c in &st.coeffs {
            lhs = lhs.add(&dws.mul_qseries(c)?)?;
            dws = dws.apply_dw();
        }
        let rhs = fm1.series.mul_wpoly(&w_power(n - 1 - p as u32));
        parts.push(compare_ladder("level equation", n, &label, &rhs, &lhs));
    }

    let closing = fps[n as usize - 1]
        .series
        .mul_qseries(&base.mul(&prod)?)?;
    parts.push(compare_ladder("closing relation", n, "p=n-1", &fm1.series, &closing));
    Ok(combine("descent", n, order, parts))
}

/// `𝔽̂_p ≡ 𝔽_p mod w^{n-p}` for `0 <= p <= n-1`, `𝔽̂_{n-1} = I_{n-1}`
/// independent of `w`, and `I_p = 𝔽̂_p(0, x)`.
pub fn verify_hat_congruence(n: u32, order: usize, perturb: Option<usize>) -> Result<Report> {
    require_n(n, 2, "hat congruence")?;
    let f = build_f(n, order)?;
    let mut fhat = build_fhat_zero(n, order)?;
    if let Some(d) = perturb {
        fhat = fhat.perturbed_by(d, &ZPoly::one());
    }
    let fps = iterates(&f, n as usize)?;
    let hats = iterates(&fhat, n as usize)?;
    let mut parts = Vec::new();
    for p in 0..n as usize {
        let need = n as usize - p;
        let mut report = Report::pass("congruence", n, order);
        for d in 0..=order {
            if let Some(v) = hats[p].series.difference_valuation(&fps[p].series, d) {
                if v < need {
                    report = Report::fail(
                        "congruence",
                        n,
                        order,
                        Failure::at_degree(
                            d,
                            format!("p={p} x^{d}"),
                            format!("w-valuation >= {need}"),
                            format!("w-valuation {v}"),
                        ),
                    );
                    break;
                }
            }
        }
        parts.push(report);
        parts.push(compare_series(
            "value at w=0",
            n,
            &format!("p={p}"),
            &fps[p].series.at_w_zero(),
            &hats[p].series.at_w_zero(),
        ));
    }
    let last = &hats[n as usize - 1].series;
    let constant = LadderSeries::from_qseries(last.ladder().clone(), &last.at_w_zero())?;
    parts.push(compare_ladder("w-independence", n, "p=n-1", &constant, last));
    Ok(combine("hat-congruence", n, order, parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_pass() {
        for n in 1..=3 {
            assert!(verify_periodicity(n, 5, None).unwrap().passed());
            assert!(verify_i_identities(n, 6, None).unwrap().passed());
            assert!(verify_picard_fuchs(n, 5, None).unwrap().passed());
        }
        assert!(verify_descent(3, 5, None).unwrap().passed());
        assert!(verify_hat_congruence(3, 5, None).unwrap().passed());
    }

    #[test]
    fn observed_minimal_periods() {
        // n = 2 is already fixed by 𝕄; n = 3 needs all three steps.
        let r = verify_periodicity(2, 6, None).unwrap();
        assert_eq!(r.notes, vec!["minimal period 1".to_string()]);
        let r = verify_periodicity(3, 6, None).unwrap();
        assert_eq!(r.notes, vec!["minimal period 3".to_string()]);
    }

    #[test]
    fn initial_descent_top_is_one_minus_nn_x() {
        let c = initial_descent(3, 2);
        assert_eq!(c[2], XSeries::new(2, vec![q(1), q(-27)]));
        // C_1 = -3 * S_2(2) x = -3 * 2 x
        assert_eq!(c[0], XSeries::monomial(2, q(-6), 1));
    }

    #[test]
    fn perturbations_fail_at_their_degree() {
        assert_eq!(verify_periodicity(3, 5, Some(3)).unwrap().failure_degree(), Some(3));
        assert_eq!(verify_i_identities(3, 5, Some(2)).unwrap().failure_degree(), Some(2));
        assert_eq!(verify_picard_fuchs(3, 5, Some(4)).unwrap().failure_degree(), Some(4));
        assert_eq!(verify_descent(3, 5, Some(2)).unwrap().failure_degree(), Some(2));
        assert_eq!(verify_hat_congruence(3, 5, Some(1)).unwrap().failure_degree(), Some(1));
    }
}
