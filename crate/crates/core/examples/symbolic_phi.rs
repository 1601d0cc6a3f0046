//! Runs the Φ-hierarchy with n kept as a symbol `a`, prints Φ_1 … Φ_smax in
//! Λ and X, lists their denominators, and specializes back to numeric n.
//!
//! Usage: cargo run --release --example symbolic_phi -- [smax]

use mirror_hg::symbolic::{denominator_report, symbolic_phi, verify_specialization};

fn main() -> mirror_hg::Result<()> {
    let smax = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let phis = symbolic_phi(smax)?;
    for (s, p) in phis.iter().enumerate().skip(1) {
        println!("Phi_{s} = {}", p.render());
    }
    for d in denominator_report(&phis) {
        println!("Phi_{} denominators: {}", d.s, d.denominators.join(", "));
    }
    for n in 3..=8 {
        println!("{}", verify_specialization(n, &phis, None)?);
    }
    Ok(())
}
