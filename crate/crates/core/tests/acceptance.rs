//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::Value;

use mirror_hg::asymptotics::{
    verify_closed_forms, verify_h_quadratic, verify_operators, verify_phi_recursion, verify_regularity,
    verify_phi_table,
};
use mirror_hg::conjecture::{verify_ek_identity, verify_pk_fit, verify_pk_interpolation};
use mirror_hg::mirror::{
    verify_descent, verify_i_identities, verify_periodicity, verify_picard_fuchs,
};
use mirror_hg::symbolic::{denominator_report, symbolic_phi, verify_specialization};
use mirror_hg::{Report, Result};

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_reports(reports: Result<Vec<Report>>, summary: impl Fn(&[Report]) -> String) -> Outcome {
    match reports {
        Err(e) => Outcome {
            passed: false,
            detail: format!("error: {e}"),
        },
        Ok(rs) => match rs.iter().find(|r| !r.passed()) {
            Some(bad) => Outcome {
                passed: false,
                detail: bad.to_string(),
            },
            None => Outcome {
                passed: true,
                detail: summary(&rs),
            },
        },
    }
}

fn count(rs: &[Report]) -> String {
    format!("{} reports", rs.len())
}

fn over<F>(ns: std::ops::RangeInclusive<u32>, f: F) -> Result<Vec<Report>>
where
    F: Fn(u32) -> Result<Report> + Sync + Send,
{
    ns.collect::<Vec<_>>().into_par_iter().map(f).collect()
}

fn periodicity() -> Outcome {
    from_reports(over(1..=8, |n| verify_periodicity(n, 12, None)), |rs| {
        let notes: Vec<String> = rs.iter().flat_map(|r| r.notes.clone()).collect();
        format!("n=1..8 mod x^13; {}", notes.join(", "))
    })
}

fn identities() -> Outcome {
    from_reports(over(2..=8, |n| verify_i_identities(n, 20, None)), |_| "n=2..8 mod x^21".into())
}

fn picard_fuchs() -> Outcome {
    from_reports(over(2..=8, |n| verify_picard_fuchs(n, 15, None)), |_| "n=2..8 mod x^16".into())
}

fn descent() -> Outcome {
    from_reports(over(3..=6, |n| verify_descent(n, 12, None)), |_| "n=3..6 mod x^13".into())
}

fn regularity() -> Outcome {
    from_reports(over(2..=8, |n| verify_regularity(n, 12, None)), |_| "n=2..8 mod x^13".into())
}

fn closed_forms() -> Outcome {
    from_reports(over(2..=8, |n| verify_closed_forms(n, 15, None)), |_| "n=2..8 mod x^16".into())
}

fn phi_recursion() -> Outcome {
    from_reports(over(3..=8, |n| verify_phi_recursion(n, 6, 12, None)), |rs| {
        format!("s<=6, n=3..8 mod x^13; {}", rs[0].notes.join(", "))
    })
}

fn operators() -> Outcome {
    from_reports(over(2..=10, |n| verify_operators(n, 12, None)), |_| "n=2..10, m<=12".into())
}

fn table() -> Outcome {
    from_reports(over(3..=5, |n| verify_phi_table(n, None)), |_| "n=3,4,5, s=1..4 (12 entries)".into())
}

fn lemma() -> Outcome {
    from_reports(over(2..=6, |n| verify_h_quadratic(n, 15, None)), |_| "n=2..6 mod x^16".into())
}

fn conjecture() -> Outcome {
    let fits = over(3..=10, |n| verify_pk_fit(n, 5, 12, None));
    let rest = || -> Result<Vec<Report>> {
        let ns: Vec<u32> = (3..=18).collect();
        Ok(vec![verify_pk_interpolation(7, &ns, 13, None)?, verify_ek_identity(7, 12, None)?])
    };
    let all = fits.and_then(|mut f| {
        f.extend(rest()?);
        Ok(f)
    });
    from_reports(all, |rs| {
        let interp = &rs[rs.len() - 2];
        format!("fits k<=5 n=3..10; P_0..P_5 interpolated; e_k k<=7; {}", interp.notes.join(", "))
    })
}

fn symbolic() -> Outcome {
    let run = || -> Result<(Vec<Report>, String)> {
        let phis = symbolic_phi(4)?;
        let reports = (3..=8).map(|n| verify_specialization(n, &phis, None)).collect::<Result<Vec<_>>>()?;
        let dens: Vec<String> = denominator_report(&phis)
            .iter()
            .map(|d| format!("Phi_{}: {}", d.s, d.denominators.join(" ")))
            .collect();
        let powers = denominator_report(&phis).iter().all(|d| d.only_powers_of_a);
        Ok((reports, format!("denominators {} (only powers of a: {powers})", dens.join(", "))))
    };
    match run() {
        Ok((rs, dens)) => from_reports(Ok(rs), |_| format!("s<=4, n=3..8; {dens}")),
        Err(e) => from_reports(Err(e), count),
    }
}

/// `(args, expected failures)`: each expected failure is a check name and a
/// fragment of its failure location.
fn controls() -> Vec<(Vec<&'static str>, Vec<(&'static str, &'static str)>)> {
    vec![
        (vec!["periodicity", "--n", "3", "--perturb", "5"], vec![("periodicity", "x^5")]),
        (vec!["identities", "--n", "4", "--perturb", "5"], vec![("I-identities", "x^5")]),
        (vec!["picard-fuchs", "--n", "4", "--perturb", "5"], vec![("picard-fuchs", "x^5")]),
        (vec!["descent", "--n", "4", "--perturb", "5"], vec![("descent", "x^5")]),
        (vec!["hat", "--n", "4", "--perturb", "5"], vec![("hat-congruence", "x^5")]),
        (
            vec!["asymptotics", "--n", "4", "--perturb", "3"],
            vec![
                ("regularity", "x^3"),
                ("closed-forms", "x^3"),
                ("phi-recursion", "x^3"),
                ("operators", "tables"),
            ],
        ),
        (vec!["table3", "--n", "4", "--perturb", "2"], vec![("table", "s=2")]),
        (vec!["lemma24", "--n", "4", "--perturb", "5"], vec![("h-quadratic", "x^5")]),
        (vec!["phi-crosscheck", "--n", "4", "--perturb", "3"], vec![("phi-cross-check", "Phi_1: x^3")]),
        (vec!["symbolic", "--n", "4", "--smax", "3", "--perturb", "2"], vec![("symbolic", "s=2")]),
        (
            vec!["conjecture", "--n", "4", "--perturb", "8"],
            vec![("pk-fit", "x^8"), ("pk-interpolation", "P_2 X^1"), ("ek-identity", "x^8")],
        ),
    ]
}

fn negative_controls() -> Outcome {
    let results: Vec<std::result::Result<String, String>> = controls()
        .into_par_iter()
        .map(|(args, expected)| {
            let mut argv = vec!["mirror-hg", "verify", "--format", "json", "--suite"];
            argv.extend(&args);
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = mirror_hg::cli::run(&argv, &mut out, &mut err);
            if code != 1 {
                return Err(format!("{} exited {code}", args[0]));
            }
            let doc: Value = serde_json::from_slice(&out).map_err(|e| e.to_string())?;
            let reports = doc["reports"].as_array().cloned().unwrap_or_default();
            for (check, frag) in &expected {
                let hit = reports.iter().any(|r| {
                    r["check"] == *check
                        && r["status"] == "fail"
                        && r["first-failure"]["location"].as_str().is_some_and(|l| l.contains(frag))
                });
                if !hit {
                    return Err(format!("{}: no {check} failure at {frag}", args[0]));
                }
            }
            Ok(args[0].to_string())
        })
        .collect();
    let bad: Vec<String> = results.iter().filter_map(|r| r.clone().err()).collect();
    if bad.is_empty() {
        Outcome {
            passed: true,
            detail: format!("{} suites exit 1 at the perturbed coefficient", results.len()),
        }
    } else {
        Outcome {
            passed: false,
            detail: bad.join("; "),
        }
    }
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("periodicity M^n F = F", periodicity),
        ("I-identities", identities),
        ("Picard-Fuchs residuals", picard_fuchs),
        ("descent closed forms", descent),
        ("regularity of log F", regularity),
        ("mu, Phi_0, Phi_1 closed forms", closed_forms),
        ("Phi-recursion and cross-check", phi_recursion),
        ("H tables and L_1, L_2", operators),
        ("renormalized Phi_s table", table),
        ("H_p quadratic identity", lemma),
        ("P_k fit, interpolation, leading term, e_k", conjecture),
        ("symbolic Phi_s specialization", symbolic),
        ("negative controls", negative_controls),
    ];
    let start = Instant::now();
    let outcomes: Vec<(Outcome, f64)> = criteria
        .par_iter()
        .map(|(_, f)| {
            let t = Instant::now();
            let o = f();
            (o, t.elapsed().as_secs_f64())
        })
        .collect();
    let mut failed = 0;
    for (i, ((name, _), (o, secs))) in criteria.iter().zip(&outcomes).enumerate() {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        if !o.passed {
            failed += 1;
        }
        println!("{tag} {:>2} {name} ({secs:.1}s): {}", i + 1, o.detail);
    }
    println!(
        "acceptance: {} of {} criteria passed in {:.1}s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
