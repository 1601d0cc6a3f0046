//! Prints the renormalized polynomials s!·(24n/((n-2)(n+1)))^s·Φ_s/L for
//! n = 3, 4, 5 and s <= 4 and checks them against the stored table.

use mirror_hg::asymptotics::{phi_table_entries, verify_phi_table};

fn main() -> mirror_hg::Result<()> {
    for n in 3..=5 {
        for (s, p) in phi_table_entries(n)?.iter().enumerate() {
            println!("n={n} s={}: {}", s + 1, p.render());
        }
        println!("{}", verify_phi_table(n, None)?);
    }
    Ok(())
}
