use proptest::prelude::*;

use mirror_hg::algebra::laurent::laurent_at_infinity;
use mirror_hg::algebra::ring::{q, qf};
use mirror_hg::algebra::series::{apply_dw, apply_dw_inverse};
use mirror_hg::algebra::{Poly, RatFunc, Rational, XSeries};
use mirror_hg::symbolic::{symbolic_l_operators, SymElem};
use num_traits::{One, Zero};

fn cfg() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(a, b)| qf(a, b))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(rational(), 1..=max_len).prop_map(Poly::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Poly<Rational>> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(3), nonzero_poly(3)).prop_map(|(n, d)| RatFunc::new(n, d))
}

fn qseries(order: usize, unit: bool) -> impl Strategy<Value = XSeries<Rational>> {
    prop::collection::vec(rational(), order + 1).prop_map(move |mut c| {
        c[0] = if unit { q(1) } else { q(0) };
        XSeries::new(order, c)
    })
}

fn sym_elem() -> impl Strategy<Value = SymElem> {
    prop::collection::vec((-2i64..=2, 0u32..=2, rational(), rational()), 1..=3).prop_map(|terms| {
        SymElem::from_terms(terms.into_iter().map(|(i, j, c0, c1)| {
            // coefficient c0 + c1 a
            ((i, j), RatFunc::from_poly(Poly::new(vec![c0, c1])))
        }))
    })
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn ratfunc_field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(a.clone() + &b, b.clone() + &a);
        prop_assert_eq!(a.clone() * &b, b.clone() * &a);
        prop_assert_eq!((a.clone() * &b) * &c, a.clone() * &(b.clone() * &c));
        prop_assert_eq!(a.clone() * &(b.clone() + &c), a.clone() * &b + &(a.clone() * &c));
        prop_assert_eq!(a.clone() - &a, RatFunc::zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() / &a, RatFunc::one());
        }
    }

    #[test]
    fn ratfunc_is_normalized(a in ratfunc(), b in ratfunc()) {
        let s = a * &b;
        let g = s.numer().gcd_euclid(s.denom());
        prop_assert_eq!(g.degree(), Some(0));
        prop_assert_eq!(s.denom().leading().cloned(), Some(q(1)));
    }

    #[test]
    fn poly_division_identity(a in poly(6), b in nonzero_poly(4)) {
        let (quo, rem) = a.div_rem(&b);
        prop_assert_eq!(quo * &b + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn dw_inverse_undoes_dw(c in prop::collection::vec(ratfunc(), 5)) {
        let f = XSeries::new(4, c);
        prop_assert_eq!(apply_dw_inverse(&apply_dw(&f)), f.clone());
        prop_assert_eq!(apply_dw(&apply_dw_inverse(&f)), f);
    }

    #[test]
    fn log_exp_round_trip(f in qseries(8, true), g in qseries(8, false)) {
        prop_assert_eq!(f.log().unwrap().exp().unwrap(), f.clone());
        prop_assert_eq!(g.exp().unwrap().log().unwrap(), g.clone());
    }

    #[test]
    fn log_turns_products_into_sums(f in qseries(7, true), g in qseries(7, true)) {
        let lhs = f.mul(&g).unwrap().log().unwrap();
        let rhs = f.log().unwrap().add(&g.log().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_inverse(f in qseries(8, true)) {
        prop_assert_eq!(f.mul(&f.inverse().unwrap()).unwrap(), XSeries::one(8));
    }

    #[test]
    fn laurent_expansion_resums(num in poly(5), den in nonzero_poly(4), depth in 0i64..6) {
        let f = RatFunc::new(num.clone(), den.clone());
        let min = -depth;
        let l = laurent_at_infinity(&f, min);
        // (Σ_{k>=min} c_k w^k) · den agrees with num in every exponent the
        // truncation cannot reach.
        let dd = f.denom().degree().unwrap() as i64;
        let fnum = f.numer();
        for e in (min + dd)..=(l.top + dd).max(0) {
            let mut s = Rational::zero();
            for (k, c) in &l.terms {
                let i = e - k;
                if (0..=dd).contains(&i) {
                    s += c * f.denom().coeff(i as usize);
                }
            }
            let want = if e >= 0 { fnum.coeff(e as usize) } else { Rational::zero() };
            prop_assert_eq!(s, want, "exponent {}", e);
        }
    }

    #[test]
    fn symbolic_d_is_a_derivation(f in sym_elem(), g in sym_elem()) {
        prop_assert_eq!(f.mul(&g).d(), f.d().mul(&g).add(&f.mul(&g.d())));
    }

    #[test]
    fn l1_acts_diagonally(i in -4i64..=4, j in 0u32..=4, c in rational()) {
        let ops = symbolic_l_operators(1);
        let l1 = ops.iter().find(|o| o.k == 1).unwrap();
        let m = SymElem::monomial(RatFunc::constant(c.clone()), i, j);
        // (X - 1)(i + a j - 1) c Λ^i X^j
        let factor = RatFunc::from_poly(Poly::new(vec![q(i - 1), q(j as i64)]));
        let want = m.scale(&factor).mul(&SymElem::monomial(RatFunc::one(), 0, 1).sub(&SymElem::monomial(RatFunc::one(), 0, 0)));
        prop_assert_eq!(l1.apply(&m), want);
    }
}
