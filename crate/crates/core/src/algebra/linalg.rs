//! Exact linear algebra: elimination for (over)determined systems and
//! Lagrange interpolation.

use num_traits::{One, Zero};

use super::poly::Poly;
use super::ring::{Field, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    /// The system has no solution; `row` is an original row index that
    /// reduces to `0 = nonzero`.
    Inconsistent { row: usize },
    /// Consistent but the columns are dependent.
    Underdetermined { rank: usize },
}

/// Solves `A x = b` exactly by Gauss–Jordan elimination. `A` may have more
/// rows than columns; every surplus row must be consistent.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Solution<F> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut origin: Vec<usize> = (0..rows).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        origin.swap(rank, p);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for c in col..=cols {
            m[rank][c] = m[rank][c].clone() * &inv;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..=cols {
                if !pivot[c].is_zero() {
                    row[c] = row[c].clone() - &(f.clone() * &pivot[c]);
                }
            }
        }
        rank += 1;
    }
    if let Some(r) = (rank..rows).find(|&r| !m[r][cols].is_zero()) {
        return Solution::Inconsistent { row: origin[r] };
    }
    if rank < cols {
        return Solution::Underdetermined { rank };
    }
    Solution::Unique((0..cols).map(|i| m[i][cols].clone()).collect())
}

/// The unique polynomial of degree `< points.len()` through the given nodes.
pub fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Poly<Rational> {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Poly::constant(Rational::one());
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = basis * Poly::linear(-xj.clone());
                denom *= xi - xj;
            }
        }
        acc = acc + basis.scale(&(yi / denom));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&k| q(k)).collect()).collect()
    }

    #[test]
    fn solves_overdetermined_consistent() {
        let a = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        let b = vec![q(3), q(1), q(4)];
        assert_eq!(solve(&a, &b), Solution::Unique(vec![q(2), q(1)]));
    }

    #[test]
    fn detects_inconsistent_and_dependent() {
        let a = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        assert!(matches!(solve(&a, &[q(3), q(1), q(5)]), Solution::Inconsistent { .. }));
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(solve(&a, &[q(1), q(2)]), Solution::Underdetermined { rank: 1 });
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let f = |x: i64| q(x * x * x - 2 * x + 5);
        let pts: Vec<_> = (0..4).map(|x| (q(x), f(x))).collect();
        assert_eq!(lagrange_interpolate(&pts), Poly::new(vec![q(5), q(-2), q(0), q(1)]));
    }
}
