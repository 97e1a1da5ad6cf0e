//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^e` for `e >= 0`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms as `(exponent, coefficient)` pairs, ascending.
    pub fn sparse_terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
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

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    fn shift_mul(&self, c: &BigInt, shift: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); shift];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        Self::from_coeffs(coeffs)
    }

    /// A nonzero constant multiple of the pseudo-remainder of `self` by `rhs`.
    fn pseudo_rem(&self, rhs: &Self) -> Self {
        let db = rhs.degree().expect("pseudo-division by zero polynomial");
        let lb = rhs.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let g = lr.gcd(&lb);
            let (fr, fb) = (&lb / &g, &lr / &g);
            r = r.scale(&fr) - rhs.shift_mul(&fb, dr - db);
        }
        r
    }

    /// Greatest common divisor, primitive-normalized up to the integer content
    /// gcd, with positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.normalized_sign();
        }
        if rhs.is_zero() {
            return self.normalized_sign();
        }
        let c = self.content().gcd(&rhs.content());
        let (mut a, mut b) = (self.primitive_part(), rhs.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return Self::constant(c);
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.scale(&c)
    }

    fn normalized_sign(&self) -> Self {
        if self.leading().is_some_and(|l| l.is_negative()) {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Exact division; returns `None` unless `rhs` divides `self` in `Z[q]`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let db = rhs.degree()?;
        if rhs.is_one() {
            return Some(self.clone());
        }
        let lb = rhs.leading().unwrap();
        let mut r = self.clone();
        let Some(da) = r.degree() else {
            return Some(Self::zero());
        };
        if da < db {
            return None;
        }
        let mut quot = vec![BigInt::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (qc, rem) = r.leading().unwrap().div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            r = r - rhs.shift_mul(&qc, dr - db);
            quot[dr - db] = qc;
        }
        Some(Self::from_coeffs(quot))
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| {
            acc * x + c.to_string().parse::<f64>().unwrap_or(f64::NAN)
        })
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntPoly {
    fn one() -> Self {
        Self::constant(BigInt::one())
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (a, b) in long.coeffs.iter_mut().zip(short.coeffs) {
            *a += b;
        }
        long.trim();
        long
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        self + (-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders as `3 - 2*q + q^4`; the zero polynomial prints as `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.sparse_terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (1+q)(2-q)(q^2+1) and (1+q)(q^2+1)(3q)
        let a = p(&[1, 1]) * p(&[2, -1]) * p(&[1, 0, 1]);
        let b = p(&[1, 1]) * p(&[1, 0, 1]) * p(&[0, 3]);
        assert_eq!(a.gcd(&b), p(&[1, 1]) * p(&[1, 0, 1]));
    }

    #[test]
    fn gcd_keeps_integer_content() {
        assert_eq!(p(&[4, 6]).gcd(&p(&[6, 9])), p(&[2, 3]));
        assert_eq!(p(&[4]).gcd(&p(&[6, 0, 2])), p(&[2]));
        assert_eq!(IntPoly::zero().gcd(&p(&[-1, -1])), p(&[1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, 1]) * p(&[3, 0, -2]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[3, 0, -2])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
    }

    #[test]
    fn display_sparse() {
        assert_eq!(p(&[3, -2, 0, 0, 1]).to_string(), "3 - 2*q + q^4");
        assert_eq!(p(&[0, -1]).to_string(), "-q");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn eval_horner() {
        let x = BigRational::new(1.into(), 2.into());
        assert_eq!(p(&[1, 2, 4]).eval(&x), BigRational::from_integer(3.into()));
    }
}
