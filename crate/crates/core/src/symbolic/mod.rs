//! The Φ-hierarchy with `n` kept as a formal parameter `a`.

pub mod operators;
pub mod phi;
pub mod ring;

pub use operators::{check_operator_specialization, power_sum, symbolic_l_operators, symbolic_sr, SymOperator};
pub use phi::{denominator_report, symbolic_phi, symbolic_phi1_closed_form, verify_specialization, DenominatorReport};
pub use ring::{SymElem, SymTerm};
