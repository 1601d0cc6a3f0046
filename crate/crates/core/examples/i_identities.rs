//! Computes I_0 … I_{n-1} and checks their product, weighted product and
//! reflection symmetry, plus the congruence between 𝔽̂_p and 𝔽_p.
//!
//! Usage: cargo run --release --example i_identities -- [n] [order]

use mirror_hg::mirror::{compute_ip_family, verify_hat_congruence, verify_i_identities};

fn main() -> mirror_hg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(5) as u32;
    let order = args.get(1).copied().unwrap_or(8);

    let fam = compute_ip_family(n, order)?;
    for (p, ip) in fam.i.iter().enumerate() {
        let head: Vec<String> = ip.coeffs().iter().take(5).map(|c| c.to_string()).collect();
        println!("I_{p} = {} + ...", head.join(", "));
    }
    println!("{}", verify_i_identities(n, order, None)?);
    if n >= 2 {
        println!("{}", verify_hat_congruence(n, order.min(10), None)?);
    }
    Ok(())
}
