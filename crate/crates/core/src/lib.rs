//! Exact verification of mirror-symmetry identities for hypergeometric
//! series attached to degree-`n` hypersurfaces in `P^{n-1}`, and of the
//! asymptotic expansions of their Frobenius basis as `n -> ∞`.

pub mod algebra;
pub mod asymptotics;
pub mod cli;
pub mod conjecture;
pub mod error;
pub mod mirror;
pub mod report;
pub mod symbolic;

pub use error::{Error, Result};
pub use report::{Report, Status};
