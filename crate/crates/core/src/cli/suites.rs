//! The `verify` verb: suites, their default ranges and the orchestrator.

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::{
    cross_check_phi, verify_closed_forms, verify_h_quadratic, verify_operators, verify_phi_recursion,
    verify_regularity, verify_phi_table,
};
use crate::conjecture::{verify_ek_identity, verify_pk_fit, verify_pk_interpolation};
use crate::error::{Error, Result};
use crate::mirror::{
    verify_descent, verify_hat_congruence, verify_i_identities, verify_periodicity, verify_picard_fuchs,
};
use crate::report::{Failure, Report};
use crate::symbolic::{check_operator_specialization, denominator_report, symbolic_l_operators, symbolic_phi, verify_specialization};

use super::output::{render_reports, VerifyDocument};
use super::{VerifyArgs, EXIT_FAIL, EXIT_OK};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Periodicity,
    Identities,
    PicardFuchs,
    Descent,
    Hat,
    Asymptotics,
    #[value(name = "table3")]
    #[serde(rename = "table3")]
    PhiTable,
    #[value(name = "lemma24")]
    #[serde(rename = "lemma24")]
    HQuadratic,
    PhiCrosscheck,
    Symbolic,
    Conjecture,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::Periodicity,
        Suite::Identities,
        Suite::PicardFuchs,
        Suite::Descent,
        Suite::Hat,
        Suite::Asymptotics,
        Suite::PhiTable,
        Suite::HQuadratic,
        Suite::PhiCrosscheck,
        Suite::Symbolic,
        Suite::Conjecture,
    ];

    /// The name used on the command line.
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }

    /// Values of n covered when none are given.
    pub fn default_ns(self) -> Vec<u32> {
        let (a, b) = match self {
            Suite::Periodicity => (1, 8),
            Suite::Identities | Suite::PicardFuchs | Suite::Hat | Suite::Asymptotics => (2, 8),
            Suite::Descent => (3, 6),
            Suite::PhiTable => (3, 5),
            Suite::HQuadratic => (2, 6),
            Suite::PhiCrosscheck | Suite::Symbolic => (3, 8),
            Suite::Conjecture => (3, 10),
            Suite::All => (1, 0),
        };
        (a..=b).collect()
    }

    /// Whether the suite is defined at `n`.
    pub fn accepts(self, n: u32) -> bool {
        match self {
            Suite::Periodicity => n >= 1,
            Suite::PhiTable => (3..=5).contains(&n),
            Suite::Descent | Suite::Symbolic | Suite::Conjecture | Suite::PhiCrosscheck => n >= 3,
            _ => n >= 2,
        }
    }
}

/// Truncations and the negative-control index shared by all suites.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct SuiteConfig {
    pub order: Option<usize>,
    pub smax: Option<usize>,
    pub kmax: Option<usize>,
    pub perturb: Option<usize>,
}

fn error_report(check: &str, n: u32, e: Error) -> Report {
    Report::fail(check, n, 0, Failure::at("error", "success", e.to_string()))
}

fn collect(check: &str, n: u32, parts: Vec<Result<Report>>) -> Vec<Report> {
    parts
        .into_iter()
        .map(|r| r.unwrap_or_else(|e| error_report(check, n, e)))
        .collect()
}

/// Runs one suite at one n. `n = None` selects the suite's n-independent
/// checks (interpolation in n, the e_k identity, symbolic tables).
pub fn run_suite(suite: Suite, n: Option<u32>, cfg: &SuiteConfig) -> Vec<Report> {
    let o = |d: usize| cfg.order.unwrap_or(d);
    let p = cfg.perturb;
    let smax = cfg.smax.unwrap_or(6);
    let kmax = cfg.kmax.unwrap_or(5);
    let name = suite.name();
    let Some(n) = n else {
        return match suite {
            Suite::Conjecture => {
                let top = 14.max(2 * kmax as u32 + 4);
                let ns: Vec<u32> = (3..=top).collect();
                collect(
                    &name,
                    0,
                    vec![
                        verify_pk_interpolation(kmax, &ns, o(12).max(kmax + 6), p),
                        verify_ek_identity(kmax.max(7), o(12), p),
                    ],
                )
            }
            Suite::Symbolic => {
                let s = cfg.smax.unwrap_or(4);
                let ops = symbolic_l_operators(s + 1);
                let ns: Vec<u32> = (3..=10).collect();
                let r1 = check_operator_specialization(&ops, &ns).map(|_| Report::pass("symbolic-operators", 0, s + 1));
                let r2 = symbolic_phi(s).map(|phis| {
                    let mut r = Report::pass("denominators", 0, s);
                    for d in denominator_report(&phis) {
                        let tag = if d.only_powers_of_a { "powers of a" } else { "COUNTEREXAMPLE" };
                        r.notes.push(format!("Phi_{}: {} ({tag})", d.s, d.denominators.join(", ")));
                    }
                    r
                });
                collect(&name, 0, vec![r1, r2])
            }
            _ => Vec::new(),
        };
    };
    let parts = match suite {
        Suite::Periodicity => vec![verify_periodicity(n, o(12), p)],
        Suite::Identities => vec![verify_i_identities(n, o(20), p)],
        Suite::PicardFuchs => vec![verify_picard_fuchs(n, o(15), p)],
        Suite::Descent => vec![verify_descent(n, o(12), p)],
        Suite::Hat => vec![verify_hat_congruence(n, o(12), p)],
        Suite::Asymptotics => vec![
            verify_regularity(n, o(12), p),
            verify_closed_forms(n, o(15), p),
            verify_phi_recursion(n, smax, o(12), p),
            verify_operators(n, 12, p),
        ],
        Suite::PhiTable => vec![verify_phi_table(n, p)],
        Suite::HQuadratic => vec![verify_h_quadratic(n, o(15), p)],
        Suite::PhiCrosscheck => vec![cross_check_phi(n, o(12), smax, p)],
        Suite::Symbolic => vec![symbolic_phi(cfg.smax.unwrap_or(4)).and_then(|phis| verify_specialization(n, &phis, p))],
        Suite::Conjecture => vec![verify_pk_fit(n, kmax, o(12).max(kmax + 6), p)],
        Suite::All => Vec::new(),
    };
    collect(&name, n, parts)
}

/// `(suite, n)` work items in report order.
fn plan(suite: Suite, requested: Option<Vec<u32>>) -> std::result::Result<Vec<(Suite, Option<u32>)>, String> {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let mut tasks = Vec::new();
    for s in suites {
        let ns = match &requested {
            Some(ns) => {
                if let Some(bad) = ns.iter().find(|&&n| !s.accepts(n)) {
                    if suite != Suite::All {
                        return Err(format!("suite {} is not defined for n = {bad}", s.name()));
                    }
                }
                ns.iter().copied().filter(|&n| s.accepts(n)).collect()
            }
            None => s.default_ns(),
        };
        tasks.extend(ns.into_iter().map(|n| (s, Some(n))));
        if matches!(s, Suite::Conjecture | Suite::Symbolic) {
            tasks.push((s, None));
        }
    }
    Ok(tasks)
}

pub(super) fn cmd_verify(args: &VerifyArgs) -> std::result::Result<(String, i32), String> {
    let c = &args.common;
    if c.n == Some(0) || c.n_range.is_some_and(|(a, _)| a == 0) {
        return Err("n must be at least 1".into());
    }
    if c.jobs == 0 {
        return Err("--jobs must be at least 1".into());
    }
    let cfg = SuiteConfig {
        order: c.order_override()?,
        smax: c.smax,
        kmax: c.kmax,
        perturb: args.perturb,
    };
    let tasks = plan(args.suite, c.ns())?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(c.jobs)
        .build()
        .map_err(|e| e.to_string())?;
    let reports: Vec<(Suite, Report)> = pool.install(|| {
        tasks
            .par_iter()
            .map(|(s, n)| run_suite(*s, *n, &cfg).into_iter().map(|r| (*s, r)).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    });
    let code = if reports.iter().all(|(_, r)| r.passed()) { EXIT_OK } else { EXIT_FAIL };
    let doc = VerifyDocument::new(args, &cfg, reports);
    Ok((render_reports(&doc, c.format), code))
}
