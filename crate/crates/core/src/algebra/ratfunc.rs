//! The rational function field ℚ(w) in canonical form.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use super::ring::{Field, Rational, Ring};
use super::zpoly::ZPoly;

/// `numer / denom` with `gcd(numer, denom) = 1` and `denom` monic. Zero is
/// `0 / 1`. Two values are equal exactly when their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    numer: Poly<Rational>,
    denom: Poly<Rational>,
}

impl RatFunc {
    /// Normalizes `numer / denom`; panics on a zero denominator.
    pub fn new(numer: Poly<Rational>, denom: Poly<Rational>) -> Self {
        Self::try_new(numer, denom).expect("rational function with zero denominator")
    }

    pub fn try_new(numer: Poly<Rational>, denom: Poly<Rational>) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        if numer.is_zero() {
            return Some(RatFunc::zero());
        }
        if denom.degree() == Some(0) {
            let inv = denom.coeff(0).recip();
            return Some(RatFunc {
                numer: numer.scale(&inv),
                denom: Poly::one(),
            });
        }
        let (cn, zn) = ZPoly::from_rational_poly(&numer);
        let (cd, zd) = ZPoly::from_rational_poly(&denom);
        let g = zn.gcd(&zd);
        let (zn, zd) = if g.degree() == Some(0) {
            (zn, zd)
        } else {
            (
                zn.div_exact(&g).expect("gcd divides numerator"),
                zd.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lead = Rational::from_integer(zd.leading().unwrap().clone());
        let scale = cn / cd / &lead;
        Some(RatFunc {
            numer: zn.to_rational_poly().scale(&scale),
            denom: zd.to_rational_poly().scale(&lead.recip()),
        })
    }

    /// Builds a value already known to be in lowest terms; only the
    /// denominator is made monic.
    pub fn from_coprime(numer: Poly<Rational>, denom: Poly<Rational>) -> Self {
        let lead = denom.leading().expect("zero denominator").recip();
        RatFunc {
            numer: numer.scale(&lead),
            denom: denom.scale(&lead),
        }
    }

    pub fn from_poly(p: Poly<Rational>) -> Self {
        RatFunc {
            numer: p,
            denom: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The generator `w`.
    pub fn var() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numer(&self) -> &Poly<Rational> {
        &self.numer
    }

    pub fn denom(&self) -> &Poly<Rational> {
        &self.denom
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.degree() == Some(0)
    }

    /// Value at a point, `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.denom.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.numer.eval(at) / d)
        }
    }

    /// True when the denominator does not vanish at `w = 0`.
    pub fn is_holomorphic_at_zero(&self) -> bool {
        !self.denom.coeff(0).is_zero()
    }

    /// Order of vanishing at `w = 0` (negative for a pole); `None` for zero.
    pub fn valuation_at_zero(&self) -> Option<i64> {
        let vn = self.numer.valuation()? as i64;
        let vd = self.denom.valuation().unwrap() as i64;
        Some(vn - vd)
    }

    /// `deg numer - deg denom`, the exponent of the leading term at infinity.
    pub fn degree_at_infinity(&self) -> Option<i64> {
        let dn = self.numer.degree()? as i64;
        Some(dn - self.denom.degree().unwrap() as i64)
    }

    /// Substitutes `w -> w + c`.
    pub fn translate(&self, c: &Rational) -> Self {
        let shift = Poly::linear(c.clone());
        RatFunc::from_coprime(self.numer.compose(&shift), self.denom.compose(&shift))
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.numer.render(var)
        } else {
            format!("({})/({})", self.numer.render(var), self.denom.render(var))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("w"))
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            numer: Poly::zero(),
            denom: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::constant(Rational::one())
    }
}

impl Add<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.denom == rhs.denom {
            return RatFunc::new(self.numer + &rhs.numer, self.denom);
        }
        RatFunc::new(
            self.numer * &rhs.denom + &(rhs.numer.clone() * &self.denom),
            self.denom * &rhs.denom,
        )
    }
}

impl Sub<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl Mul<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            let c = self.denom.coeff(0) * rhs.denom.coeff(0);
            return RatFunc::from_poly((self.numer * &rhs.numer).scale(&c.recip()));
        }
        RatFunc::new(self.numer * &rhs.numer, self.denom * &rhs.denom)
    }
}

impl Div<&RatFunc> for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFunc::new(self.numer * &rhs.denom, self.denom * &rhs.numer)
    }
}

macro_rules! by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                $tr::$m(self, &rhs)
            }
        }
    )*};
}
by_value!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            numer: -self.numer,
            denom: self.denom,
        }
    }
}

impl Ring for RatFunc {
    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }
}

impl Field for RatFunc {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{q, qf};

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::new(c.iter().map(|&k| q(k)).collect())
    }

    #[test]
    fn canonical_form_is_monic_and_reduced() {
        // (2w^2 - 2) / (4w + 4) = (w - 1)/2
        let r = RatFunc::new(p(&[-2, 0, 2]), p(&[4, 4]));
        assert!(r.is_polynomial());
        assert_eq!(r.numer(), &Poly::new(vec![qf(-1, 2), qf(1, 2)]));
        let s = RatFunc::new(p(&[3]), p(&[2, 6]));
        assert_eq!(s.denom(), &Poly::new(vec![qf(1, 3), q(1)]));
        assert_eq!(s.numer(), &Poly::constant(qf(1, 2)));
    }

    #[test]
    fn zero_has_unit_denominator() {
        let z = RatFunc::new(p(&[]), p(&[1, 5]));
        assert_eq!(z.denom(), &Poly::one());
        assert!(z.is_zero());
    }

    #[test]
    fn arithmetic_and_translation() {
        let w = RatFunc::var();
        let one = RatFunc::one();
        let a = (w.clone() + &one) / &w; // (w+1)/w
        let b = one.clone() / &w;
        assert_eq!(a.clone() - &b, one);
        assert_eq!(a.translate(&q(-1)), w.clone() / &(w.clone() - &one));
        assert_eq!(a.degree_at_infinity(), Some(0));
        assert_eq!(b.valuation_at_zero(), Some(-1));
        assert!(!b.is_holomorphic_at_zero());
    }
}
