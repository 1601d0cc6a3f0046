//! Fitting and interpolating the conjectured coefficients P_k(n, X).

pub mod leading;
pub mod pk;
pub mod verify;

pub use leading::{alphas, ek, leading_term, verify_ek_identity, OddSign};
pub use pk::{
    a_b_coefficients, common_factor, compute_pk, expected_pk, fit_pk, interpolate_pk, pk_series, PkFit, PkPolynomial,
};
pub use verify::{interpolate_all, leading_term_check, verify_pk_fit, verify_pk_interpolation, ConjectureRun};
