//! Solves the first-order ODE hierarchy for Φ_s in L and compares it with the
//! direct expansion of log 𝔽.
//!
//! Usage: cargo run --release --example phi_recursion -- [n] [smax] [order]

use std::time::Instant;

use mirror_hg::asymptotics::{build_l_operators, cross_check_phi, solve_phi_recursion, verify_phi_recursion};

fn main() -> mirror_hg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(5) as u32;
    let smax = args.get(1).copied().unwrap_or(4);
    let order = args.get(2).copied().unwrap_or(10);

    for op in build_l_operators(n)?.iter().filter(|o| (1..=3).contains(&o.k)) {
        println!("L_{} = {}", op.k, op.render());
    }
    let t = Instant::now();
    for (s, phi) in solve_phi_recursion(n, smax)?.iter().enumerate() {
        println!("Phi_{s} = {}", phi.render());
    }
    println!("solved in {:.2?}", t.elapsed());

    println!("{}", verify_phi_recursion(n, smax, order, None)?);
    println!("{}", cross_check_phi(n, order, smax, None)?);
    Ok(())
}
