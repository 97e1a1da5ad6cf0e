//! The limit pmf as a weighted sum of squared Clebsch-Gordan coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dist::Params;
use crate::error::{Error, Result};
use crate::scalar::{binomial, factorial};
use crate::ExactRational;

/// A half-integer, stored as twice its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// `(a + b + ...)` for half-integers known to sum to an integer.
fn whole(twice: i64) -> i64 {
    debug_assert!(twice % 2 == 0);
    twice / 2
}

fn fact(v: i64) -> BigInt {
    factorial(v as u64)
}

/// `<j1 m1 j2 m2 | j3 m3>^2` from Racah's closed form.
pub fn cg_square(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    j3: HalfInt,
    m3: HalfInt,
) -> Result<ExactRational> {
    let (tj1, tm1, tj2, tm2, tj3, tm3) = (j1.0, m1.0, j2.0, m2.0, j3.0, m3.0);
    let violation = |why: &str| {
        Error::SelectionRuleViolation(format!("<{j1} {m1} {j2} {m2} | {j3} {m3}>: {why}"))
    };
    if tj1 < 0 || tj2 < 0 || tj3 < 0 {
        return Err(violation("negative j"));
    }
    for (tj, tm) in [(tj1, tm1), (tj2, tm2), (tj3, tm3)] {
        if tm.abs() > tj {
            return Err(violation("|m| > j"));
        }
        if (tj + tm) % 2 != 0 {
            return Err(violation("j + m not an integer"));
        }
    }
    if tm3 != tm1 + tm2 {
        return Err(violation("m3 != m1 + m2"));
    }
    if (tj1 + tj2 + tj3) % 2 != 0 {
        return Err(violation("j1 + j2 + j3 not an integer"));
    }
    if tj3 < (tj1 - tj2).abs() || tj3 > tj1 + tj2 {
        return Err(violation("triangle rule"));
    }

    let a = whole(tj1 + tj2 - tj3);
    let b = whole(tj1 - tj2 + tj3);
    let c = whole(-tj1 + tj2 + tj3);
    let s = whole(tj1 + tj2 + tj3);
    let delta = ExactRational::new(fact(a) * fact(b) * fact(c), fact(s + 1));

    let mut prod = BigInt::from(1);
    for (tj, tm) in [(tj1, tm1), (tj2, tm2), (tj3, tm3)] {
        prod *= fact(whole(tj + tm)) * fact(whole(tj - tm));
    }

    let j1m1 = whole(tj1 - tm1);
    let j2p2 = whole(tj2 + tm2);
    let e1 = whole(tj3 - tj2 + tm1);
    let e2 = whole(tj3 - tj1 - tm2);
    let lo = 0.max(-e1).max(-e2);
    let hi = a.min(j1m1).min(j2p2);
    let mut sum = ExactRational::zero();
    for t in lo..=hi {
        let den =
            fact(t) * fact(a - t) * fact(j1m1 - t) * fact(j2p2 - t) * fact(e1 + t) * fact(e2 + t);
        let term = ExactRational::new(BigInt::from(1), den);
        if t % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(ExactRational::from_integer(BigInt::from(tj3 + 1))
        * delta
        * ExactRational::from_integer(prod)
        * sum.clone()
        * sum)
}

/// `dim V_(k-u, u) = binom(k,u) - binom(k,u-1)`.
fn two_row_dim(k: i64, u: i64) -> BigInt {
    binomial(k, u) - binomial(k, u - 1)
}

/// `sum_u dim V_(k-u,u) / binom(k,l) * c(x,u)^2` with
/// `c = <k/2-u, k/2-l; (n-k)/2, (n-k)/2-(m-l) | n/2-x, n/2-m>`.
pub fn pmf_cg_oracle(p: &Params, x: u32) -> Result<ExactRational> {
    p.check_x(x)?;
    let (n, m, k, l, x) = (p.n as i64, p.m as i64, p.k as i64, p.l as i64, x as i64);
    let lo = 0.max(x - n + k);
    let hi = x.min(k - x).min(l).min(k - l);
    let mut total = ExactRational::zero();
    for u in lo..=hi {
        let c2 = cg_square(
            HalfInt::from_twice(k - 2 * u),
            HalfInt::from_twice(k - 2 * l),
            HalfInt::from_twice(n - k),
            HalfInt::from_twice(n - k - 2 * (m - l)),
            HalfInt::from_twice(n - 2 * x),
            HalfInt::from_twice(n - 2 * m),
        )?;
        total += ExactRational::new(two_row_dim(k, u), binomial(k, l)) * c2;
    }
    Ok(total)
}
