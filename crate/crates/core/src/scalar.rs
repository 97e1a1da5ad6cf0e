//! The field abstraction every formula in the crate is written against.
//!
//! Implementors: [`ExactRational`](crate::ExactRational) for concrete rational
//! `q`, [`RationalFunction`](crate::RationalFunction) for the formal variable,
//! and `f32`/`f64` for display-only approximations.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative field with exact (or, for floats, best-effort) zero tests.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;

    /// Field division; a zero divisor is reported, never turned into a value.
    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    fn checked_inv(&self) -> Result<Self> {
        Self::one().checked_div(self)
    }

    /// Integer power, negative exponents through inversion.
    fn powi(&self, e: i64) -> Result<Self> {
        let base = if e < 0 {
            self.checked_inv()?
        } else {
            self.clone()
        };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * sq.clone();
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.clone() * sq;
            }
        }
        Ok(acc)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn checked_div(&self, rhs: &Self) -> Result<Self> {
                if *rhs == 0.0 {
                    return Err(Error::DivisionByZero);
                }
                Ok(self / rhs)
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

/// Ordinary binomial coefficient with the convention `binom(a, r) = 0` for `r < 0`
/// or `r > a` when `a >= 0`.
pub fn binomial(a: i64, r: i64) -> BigInt {
    if r < 0 || (a >= 0 && r > a) {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..r {
        num *= BigInt::from(a - j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}
