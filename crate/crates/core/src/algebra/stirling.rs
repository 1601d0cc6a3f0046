//! Stirling-type integer tables.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `S_0(m), …, S_m(m)`: the elementary symmetric functions of `1, …, m`, so
/// that `Π_{i=1}^{m} (t + i) = Σ_r S_r(m) t^{m-r}`.
pub fn elementary_symmetric(m: u32) -> Vec<BigInt> {
    let mut s = vec![BigInt::one()];
    for i in 1..=m {
        let mut next = s.clone();
        next.push(BigInt::zero());
        for r in 1..next.len() {
            next[r] += &s[r - 1] * BigInt::from(i);
        }
        s = next;
    }
    s
}

/// Stirling numbers of the second kind `𝔖_k^{(l)}` for `0 <= l <= k <= kmax`,
/// indexed `[k][l]`.
pub fn stirling2_table(kmax: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::zero(); kmax + 1]; kmax + 1];
    t[0][0] = BigInt::one();
    for k in 1..=kmax {
        for l in 1..=k {
            t[k][l] = BigInt::from(l) * &t[k - 1][l] + &t[k - 1][l - 1];
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&k| BigInt::from(k)).collect()
    }

    #[test]
    fn first_kind_small() {
        // (t+1)(t+2)(t+3) = t^3 + 6t^2 + 11t + 6
        assert_eq!(elementary_symmetric(3), ints(&[1, 6, 11, 6]));
        assert_eq!(elementary_symmetric(0), ints(&[1]));
    }

    #[test]
    fn second_kind_row_four() {
        assert_eq!(stirling2_table(4)[4], ints(&[0, 1, 7, 6, 1]));
    }
}
