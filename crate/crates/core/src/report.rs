//! Verification report records shared by every checker and the CLI.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Where and how a check first went wrong.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// x-degree of the first disagreement when the check is coefficientwise.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    /// Human-readable location, e.g. `"p=1 s=0 x^4"`.
    pub location: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub n: u32,
    pub order: usize,
    pub status: Status,
    #[serde(rename = "first-failure", skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
    /// Observations that do not affect the verdict (minimal period, degrees, ...).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn pass(check: impl Into<String>, n: u32, order: usize) -> Self {
        Report {
            check: check.into(),
            n,
            order,
            status: Status::Pass,
            first_failure: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(check: impl Into<String>, n: u32, order: usize, failure: Failure) -> Self {
        Report {
            check: check.into(),
            n,
            order,
            status: Status::Fail,
            first_failure: Some(failure),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Failure degree, if the report failed at a specific x-degree.
    pub fn failure_degree(&self) -> Option<usize> {
        self.first_failure.as_ref().and_then(|f| f.degree)
    }

    /// `Ok(self)` on pass, the matching [`crate::Error`] on failure.
    pub fn into_result(self) -> crate::Result<Report> {
        if self.passed() {
            Ok(self)
        } else {
            Err(crate::Error::from(&self))
        }
    }
}

impl Failure {
    pub fn at_degree(
        degree: usize,
        location: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Failure {
            degree: Some(degree),
            location: location.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn at(location: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Failure {
            degree: None,
            location: location.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {:<22} n={:<3} order={}", self.check, self.n, self.order)?;
        if let Some(fl) = &self.first_failure {
            write!(f, "  at {}: expected {} got {}", fl.location, fl.expected, fl.actual)?;
        }
        for note in &self.notes {
            write!(f, "  [{note}]")?;
        }
        Ok(())
    }
}

/// Merges a sequence of sub-check reports into one: the first failure wins.
pub fn combine(check: &str, n: u32, order: usize, parts: Vec<Report>) -> Report {
    let mut notes = Vec::new();
    for part in parts {
        notes.extend(part.notes.iter().cloned());
        if !part.passed() {
            let mut failure = part.first_failure.unwrap_or_default();
            failure.location = format!("{}: {}", part.check, failure.location);
            let mut r = Report::fail(check, n, order, failure);
            r.notes = notes;
            return r;
        }
    }
    let mut r = Report::pass(check, n, order);
    r.notes = notes;
    r
}
