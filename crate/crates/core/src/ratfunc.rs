//! Elements of the rational function field `Q(q)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::scalar::Scalar;

/// A reduced fraction `numerator / denominator` of integer polynomials in `q`.
///
/// Canonical form: numerator and denominator share no nonconstant factor and
/// no integer content, and the denominator has a positive leading coefficient.
/// The form is unique, so structural equality is equality in `Q(q)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    /// The formal variable `q`.
    pub fn q() -> Self {
        RationalFunction {
            num: IntPoly::monomial(BigInt::one(), 1),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalFunction {
            num: p,
            den: IntPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::reduce(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    /// Evaluates the reduced fraction at a rational point. A denominator that
    /// vanishes after reduction is an error; no limits are taken.
    pub fn eval(&self, at: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at) / d)
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        self.num.eval_f64(at) / self.den.eval_f64(at)
    }

    /// The constant value, if this element lies in `Q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self.num.coeffs().first().cloned().unwrap_or_default();
            Some(BigRational::new(n, self.den.coeffs()[0].clone()))
        } else {
            None
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RationalFunction {
                    num: self.num + rhs.num,
                    den: self.den,
                };
            }
            return Self::reduce(self.num + rhs.num, self.den);
        }
        let g = self.den.gcd(&rhs.den);
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &self.num * &d + &rhs.num * &b;
        let den = &self.den * &d;
        Self::reduce(num, den)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        // Cross-cancel so the product of reduced inputs comes out reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = rhs.den.div_exact(&g1).expect("gcd divides");
        let c = rhs.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = &a * &c;
        let mut den = &b * &d;
        if den.leading().is_some_and(|l| l.is_negative()) {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }
}

impl Scalar for RationalFunction {
    fn from_i64(v: i64) -> Self {
        Self::from_poly(IntPoly::constant(BigInt::from(v)))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv = RationalFunction {
            num: rhs.den.clone(),
            den: rhs.num.clone(),
        };
        // `inv` may carry a negative leading denominator; Mul renormalizes the sign.
        Ok(self.clone() * inv)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RationalFunction {
        RationalFunction::q()
    }

    fn c(v: i64) -> RationalFunction {
        RationalFunction::from_i64(v)
    }

    #[test]
    fn reduces_common_factor() {
        // (1 - q^2) / (1 - q) = 1 + q
        let num = c(1) - q() * q();
        let den = c(1) - q();
        let r = num.checked_div(&den).unwrap();
        assert_eq!(r, c(1) + q());
        assert!(r.denominator().is_one());
    }

    #[test]
    fn denominator_sign_is_positive() {
        let r = c(1).checked_div(&(c(1) - q())).unwrap();
        assert!(r.denominator().leading().unwrap().is_positive());
        assert_eq!(r.numerator().coeffs(), &[BigInt::from(-1)]);
    }

    #[test]
    fn integer_content_is_joint() {
        let r = (c(2) * q()).checked_div(&c(4)).unwrap();
        assert_eq!(r.numerator().coeffs(), &[BigInt::zero(), BigInt::one()]);
        assert_eq!(r.denominator().coeffs(), &[BigInt::from(2)]);
    }

    #[test]
    fn eval_after_reduction_at_one() {
        // [3]_q = (1 - q^3)/(1 - q) is defined at q = 1 once reduced
        let r = (c(1) - q().powi(3).unwrap())
            .checked_div(&(c(1) - q()))
            .unwrap();
        assert_eq!(
            r.eval(&BigRational::one()).unwrap(),
            BigRational::from_i64(3)
        );
        let pole = c(1).checked_div(&(c(1) - q())).unwrap();
        assert_eq!(pole.eval(&BigRational::one()), Err(Error::DivisionByZero));
    }

    #[test]
    fn negative_powers() {
        let r = q().powi(-2).unwrap() * q().powi(3).unwrap();
        assert_eq!(r, q());
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(c(1).checked_div(&c(0)), Err(Error::DivisionByZero));
    }
}
