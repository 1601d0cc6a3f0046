//! Integer-coefficient polynomial kernel.
//!
//! [`ZPoly`] holds polynomials in ℤ[w]; [`QPoly`] is a polynomial in ℚ[w]
//! stored as an integer polynomial over one shared positive denominator, so
//! that the hot loops (convolution, multiplication by small factors, addition)
//! never normalize individual rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::ring::Rational;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&k| BigInt::from(k)).collect())
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `a*w + b`.
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64(&[b, a])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        ZPoly::new(
            (0..n)
                .map(|i| self.coeff(i) + other.coeffs.get(i).cloned().unwrap_or_default())
                .collect(),
        )
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        // Iterate with the shorter operand outside: small factors such as
        // (w + d) are the common case.
        let (a, b) = if self.coeffs.len() <= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        ZPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        (0..e).fold(ZPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplies by `w^k`.
    pub fn shift(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        ZPoly { coeffs }
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    /// Multiplicity of the root `w = 0`.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Pseudo-remainder `lc(b)^k * a mod b`.
    pub fn pseudo_rem(&self, b: &ZPoly) -> ZPoly {
        let db = b.degree().expect("pseudo-remainder by zero");
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = dr - db;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lb).collect();
            for (i, bc) in b.coeffs.iter().enumerate() {
                coeffs[i + shift] -= &lr * bc;
            }
            r = ZPoly::new(coeffs);
        }
        r
    }

    /// Exact division in ℤ[w]; `None` if `b` does not divide `self` over ℤ.
    pub fn div_exact(&self, b: &ZPoly) -> Option<ZPoly> {
        let db = b.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let da = self.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = b.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lb);
            if !r.is_zero() {
                return None;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                rem[k + i] -= &qk * bc;
            }
            quot[k] = qk;
        }
        rem.iter().all(|c| c.is_zero()).then(|| ZPoly::new(quot))
    }

    /// Gcd of two integer polynomials as a primitive polynomial with positive
    /// leading coefficient (primitive polynomial remainder sequence).
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return ZPoly::one();
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    /// Splits a rational polynomial into `content * primitive` with an integer
    /// primitive part of positive leading coefficient.
    pub fn from_rational_poly(p: &Poly<Rational>) -> (Rational, ZPoly) {
        if p.is_zero() {
            return (Rational::zero(), ZPoly::zero());
        }
        let l = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = ZPoly::new(
            p.coeffs()
                .iter()
                .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
                .collect(),
        );
        let prim = ints.primitive_part();
        let ratio = Rational::new(ints.leading().unwrap().clone(), prim.leading().unwrap().clone());
        (ratio / Rational::from_integer(l), prim)
    }

    pub fn to_rational_poly(&self) -> Poly<Rational> {
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }
}

/// Polynomial in ℚ[w] as `num / den` with `den > 0`.
#[derive(Clone, Debug)]
pub struct QPoly {
    num: ZPoly,
    den: BigInt,
}

impl PartialEq for QPoly {
    fn eq(&self, other: &QPoly) -> bool {
        self.num.scale(&other.den) == other.num.scale(&self.den)
    }
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly {
            num: ZPoly::zero(),
            den: BigInt::one(),
        }
    }

    pub fn from_zpoly(num: ZPoly) -> Self {
        QPoly {
            num,
            den: BigInt::one(),
        }
    }

    pub fn from_parts(num: ZPoly, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            QPoly {
                num: num.neg(),
                den: -den,
            }
        } else {
            QPoly { num, den }
        }
    }

    pub fn from_poly(p: &Poly<Rational>) -> Self {
        let l = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = ZPoly::new(
            p.coeffs()
                .iter()
                .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
                .collect(),
        );
        QPoly { num, den: l }
    }

    pub fn to_poly(&self) -> Poly<Rational> {
        Poly::new(
            self.num
                .coeffs()
                .iter()
                .map(|c| Rational::new(c.clone(), self.den.clone()))
                .collect(),
        )
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.num.degree()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        Rational::new(self.num.coeff(k), self.den.clone())
    }

    pub fn eval_zero(&self) -> Rational {
        self.coeff(0)
    }

    /// Brings `num / den` to lowest terms.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = self.num.content().gcd(&self.den);
        if !g.is_one() {
            self.num = ZPoly {
                coeffs: self.num.coeffs.iter().map(|c| c / &g).collect(),
            };
            self.den = &self.den / &g;
        }
    }

    pub fn reduced(mut self) -> Self {
        self.reduce();
        self
    }

    fn combine(&self, other: &QPoly, subtract: bool) -> QPoly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { other.neg() } else { other.clone() };
        }
        let l = self.den.lcm(&other.den);
        let a = self.num.scale(&(&l / &self.den));
        let mut b = other.num.scale(&(&l / &other.den));
        if subtract {
            b = b.neg();
        }
        QPoly {
            num: a.add(&b),
            den: l,
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.combine(other, true)
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        QPoly {
            num: self.num.mul(&other.num),
            den: &self.den * &other.den,
        }
    }

    pub fn mul_z(&self, z: &ZPoly) -> QPoly {
        QPoly {
            num: self.num.mul(z),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_parts(self.num.scale(c.numer()), &self.den * c.denom())
    }

    pub fn shift(&self, k: usize) -> QPoly {
        QPoly {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Divides by `w^k`, or `None` if `w^k` does not divide.
    pub fn unshift(&self, k: usize) -> Option<QPoly> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.num.valuation().unwrap() < k {
            return None;
        }
        Some(QPoly {
            num: ZPoly::new(self.num.coeffs[k..].to_vec()),
            den: self.den.clone(),
        })
    }

    /// Multiplicity of the root `w = 0`.
    pub fn valuation(&self) -> Option<usize> {
        self.num.valuation()
    }
}

/// Compares `a/b` against `c/d` for nonzero integer polynomials `b`, `d`.
pub fn cross_equal(a: &QPoly, b: &ZPoly, c: &QPoly, d: &ZPoly) -> bool {
    a.mul_z(d) == c.mul_z(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{q, qf};

    #[test]
    fn integer_gcd_is_primitive() {
        // 6(x-1)(x+2) and 4(x-1)(x+3)
        let a = ZPoly::from_i64(&[-12, 6, 6]);
        let b = ZPoly::from_i64(&[-12, 8, 4]);
        assert_eq!(a.gcd(&b), ZPoly::from_i64(&[-1, 1]));
        assert_eq!(a.gcd(&ZPoly::from_i64(&[5])), ZPoly::one());
    }

    #[test]
    fn exact_division_detects_remainders() {
        let a = ZPoly::from_i64(&[-1, 0, 0, 1]);
        assert_eq!(a.div_exact(&ZPoly::from_i64(&[-1, 1])), Some(ZPoly::from_i64(&[1, 1, 1])));
        assert_eq!(a.div_exact(&ZPoly::from_i64(&[1, 2])), None);
    }

    #[test]
    fn rational_split() {
        let p = Poly::new(vec![qf(1, 2), qf(-3, 4)]);
        let (c, z) = ZPoly::from_rational_poly(&p);
        assert_eq!(z, ZPoly::from_i64(&[-2, 3]));
        assert_eq!(c, qf(-1, 4));
    }

    #[test]
    fn scaled_arithmetic_matches_rational() {
        let a = Poly::new(vec![qf(1, 3), q(2)]);
        let b = Poly::new(vec![qf(-1, 6), qf(5, 4), q(1)]);
        let qa = QPoly::from_poly(&a);
        let qb = QPoly::from_poly(&b);
        assert_eq!(qa.add(&qb).to_poly(), a.clone() + &b);
        assert_eq!(qa.sub(&qb).to_poly(), a.clone() - &b);
        assert_eq!(qa.mul(&qb).to_poly(), a.clone() * &b);
        assert_eq!(qa.scale(&qf(3, 7)).to_poly(), a.scale(&qf(3, 7)));
        let mut r = QPoly::from_parts(ZPoly::from_i64(&[4, 8]), BigInt::from(12));
        r.reduce();
        assert_eq!(r.denominator(), &BigInt::from(3));
    }
}
