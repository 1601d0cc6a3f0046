//! Expands log 𝔽 at w = ∞ and prints μ, the μ_j and Φ_0 … Φ_smax as x-series,
//! then runs the regularity and closed-form checks.
//!
//! Usage: cargo run --release --example asymptotics -- [n] [order] [smax]

use mirror_hg::asymptotics::{expand_logf, verify_closed_forms, verify_regularity};

fn main() -> mirror_hg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(5) as u32;
    let order = args.get(1).copied().unwrap_or(6);
    let smax = args.get(2).copied().unwrap_or(3);

    let e = expand_logf(n, order, smax)?;
    let show = |c: &[mirror_hg::algebra::Rational]| c.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ");
    println!("mu    = [{}]", show(e.mu.coeffs()));
    for (j, m) in e.mus.iter().enumerate() {
        println!("mu_{j:<2} = [{}]", show(m.coeffs()));
    }
    for (s, p) in e.phi.iter().enumerate() {
        println!("Phi_{s} = [{}]", show(p.coeffs()));
    }

    println!("{}", verify_regularity(n, order, None)?);
    println!("{}", verify_closed_forms(n, order, None)?);
    Ok(())
}
