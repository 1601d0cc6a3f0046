//! Checks 𝕄ⁿ𝔽 = 𝔽 for a range of n and prints the observed minimal period.
//!
//! Usage: cargo run --release --example periodicity -- [max_n] [order]

use std::time::Instant;

use mirror_hg::mirror::verify_periodicity;

fn main() -> mirror_hg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let max_n = args.first().copied().unwrap_or(6) as u32;
    let order = args.get(1).copied().unwrap_or(10);
    for n in 1..=max_n {
        let t = Instant::now();
        let report = verify_periodicity(n, order, None)?;
        println!("{report}  ({:.2?})", t.elapsed());
    }
    Ok(())
}
