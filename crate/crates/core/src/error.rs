use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series division by a series with zero constant term")]
    DivisionByNonUnit,

    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("bad constant term: {0}")]
    BadConstantTerm(&'static str),

    #[error("series is not in P: {0}")]
    NotInP(String),

    #[error("{check} failed (n = {n}) at {location}: expected {expected}, got {actual}")]
    VerificationFailure {
        check: String,
        n: u32,
        location: String,
        expected: String,
        actual: String,
    },

    #[error("log F has Laurent degree {degree} > 1 at x^{x_degree} (n = {n})")]
    RegularityFailure { n: u32, x_degree: usize, degree: i64 },

    #[error("table inconsistency: {0}")]
    TableInconsistency(String),

    #[error("degree bound {bound} too small for Phi_{s} (n = {n})")]
    DegreeBoundExceeded { n: u32, s: usize, bound: usize },

    #[error("singular linear system: {0}")]
    SingularSystem(String),

    #[error("specialization mismatch: {0}")]
    SpecializationMismatch(String),

    #[error("symbolic solve failed: {0}")]
    SolveFailure(String),

    #[error("nonzero fit residual for P_{k} (n = {n}) at x^{x_degree}")]
    FitResidualNonzero { n: u32, k: usize, x_degree: usize },

    #[error("rank-deficient fit for P_{k} (n = {n}): increase the x-order")]
    RankDeficient { n: u32, k: usize },

    #[error("interpolation of P_{k} unstable at X^{x_power}: degree in n underestimated")]
    InterpolationUnstable { k: usize, x_power: usize },

    #[error("leading-term mismatch for P_{k}: {detail}")]
    LeadingTermMismatch { k: usize, detail: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<&Report> for Error {
    fn from(r: &Report) -> Self {
        let f = r.first_failure.clone().unwrap_or_default();
        Error::VerificationFailure {
            check: r.check.clone(),
            n: r.n,
            location: f.location,
            expected: f.expected,
            actual: f.actual,
        }
    }
}
