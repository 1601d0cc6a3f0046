//! Checks the Picard–Fuchs equations of 𝔽₋₁ and 𝔽̂₀ and the descent of their
//! coefficients through 𝕄, then shows a negative control.
//!
//! Usage: cargo run --release --example picard_fuchs -- [n] [order]

use mirror_hg::mirror::{descend_c, verify_descent, verify_picard_fuchs};
use mirror_hg::mirror::{build_f, iterates};

fn main() -> mirror_hg::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let n = args.first().copied().unwrap_or(4) as u32;
    let order = args.get(1).copied().unwrap_or(10);

    println!("{}", verify_picard_fuchs(n, order, None)?);
    println!("{}", verify_descent(n, order, None)?);

    let i: Vec<_> = iterates(&build_f(n, 4)?, n as usize)?
        .iter()
        .map(|f| f.series.at_w_zero())
        .collect();
    for st in descend_c(n, &i, 4)? {
        println!("p = {}", st.p);
        for (s, c) in st.coeffs.iter().enumerate() {
            let head: Vec<String> = c.coeffs().iter().map(|q| q.to_string()).collect();
            println!("  C_{s}: [{}]", head.join(", "));
        }
    }

    println!("perturbed at x^3: {}", verify_picard_fuchs(n, order, Some(3))?);
    Ok(())
}
