//! The expansion of 𝔽 at `w = ∞` and the Φ-hierarchy.

pub mod expand;
pub mod htables;
pub mod loperators;
pub mod lpoly;
pub mod phi;
pub mod verify;

pub use expand::{expand_log_series, expand_logf, expand_logf_uadic, phis_from_mus, AsymptoticExpansion};
pub use htables::{build_h_tables, check_tables, compute_h_tables, HPolyTable};
pub use loperators::{build_l_operators, check_low_operators, closed_form_l1_l2, l_operators_from_table, LOperator};
pub use lpoly::LPoly;
pub use phi::{phi_residual, solve_phi_recursion, solve_phi_with};
pub use verify::{
    cross_check_phi, phi_table_entries, verify_closed_forms, verify_h_quadratic, verify_operators,
    verify_phi_recursion, verify_regularity, verify_phi_table,
};
