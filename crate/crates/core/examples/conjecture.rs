//! Fits P_0 … P_kmax for each n, interpolates them in n and checks the
//! leading n-behaviour against α_j e_k(X).
//!
//! Usage: cargo run --release --example conjecture -- [kmax] [order]

use mirror_hg::conjecture::{alphas, ek, interpolate_all, leading_term_check, verify_ek_identity};

fn main() -> mirror_hg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let kmax = args.first().copied().unwrap_or(5);
    let order = args.get(1).copied().unwrap_or(12).max(kmax + 6);
    let ns: Vec<u32> = (3..=(2 * kmax as u32 + 4).max(14)).collect();

    let run = interpolate_all(kmax, &ns, order, None)?;
    for pk in &run.pks {
        println!("P_{} = {}", pk.k, pk.render());
    }
    let a: Vec<String> = alphas(3)?.iter().map(|q| q.to_string()).collect();
    println!("alpha_0..3 = {}", a.join(", "));
    for k in 1..=4 {
        println!("e_{k} = {}", ek(k).render("X"));
    }
    println!("{}", leading_term_check(&run.pks, kmax.min(5))?);
    println!("{}", verify_ek_identity(7, 12, None)?);
    Ok(())
}
