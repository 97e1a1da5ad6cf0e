//! q-integers, q-Pochhammer symbols, Gaussian binomials, and terminating
//! (basic) hypergeometric series over any [`Scalar`].

mod identities;
mod series;

pub use identities::{q_chu_vandermonde, sears_43};
pub use series::{eval_series, SeriesKind, SeriesParam, SeriesSpec};

use crate::error::Result;
use crate::scalar::Scalar;

/// `[n]_q = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_integer<S: Scalar>(n: u32, q: &S) -> S {
    let mut acc = S::zero();
    let mut pow = S::one();
    for _ in 0..n {
        acc = acc + pow.clone();
        pow = pow * q.clone();
    }
    acc
}

/// `(a; q)_n = (1 - a)(1 - a q) ... (1 - a q^(n-1))`.
pub fn q_pochhammer<S: Scalar>(a: &S, q: &S, n: u32) -> S {
    let mut acc = S::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc = acc * (S::one() - term.clone());
        term = term * q.clone();
    }
    acc
}

/// Gaussian binomial `[n m]_q`, zero when `m < 0` or `m > n`.
///
/// Built with the Pascal rule `[n m] = [n-1 m-1] + q^m [n-1 m]`, which never
/// divides and so is valid at every `q`, including `q = 1`.
pub fn q_binomial<S: Scalar>(n: i64, m: i64, q: &S) -> S {
    if m < 0 || n < 0 || m > n {
        return S::zero();
    }
    let m = m.min(n - m) as usize;
    let n = n as usize;
    // row[j] holds [i j]_q while sweeping i = 0..=n
    let mut row = vec![S::zero(); m + 1];
    row[0] = S::one();
    let mut qpow: Vec<S> = Vec::with_capacity(m + 1);
    let mut p = S::one();
    for _ in 0..=m {
        qpow.push(p.clone());
        p = p * q.clone();
    }
    for i in 1..=n {
        for j in (1..=m.min(i)).rev() {
            row[j] = row[j - 1].clone() + qpow[j].clone() * row[j].clone();
        }
    }
    row[m].clone()
}

/// Checks both inversion forms of the Gaussian binomial:
/// `[n m] = (q^n; q^-1)_m / (q^m; q^-1)_m = (q^-n; q)_m / (q; q)_m (-q^n)^m q^-binom(m,2)`,
/// with `q` the given value (pass the formal variable for an identity in `Q(q)`).
pub fn q_binomial_inversion_identity<S: Scalar>(n: u32, m: u32, q: &S) -> Result<bool> {
    let (ni, mi) = (n as i64, m as i64);
    let direct = q_binomial(ni, mi, q);
    let qinv = q.checked_inv()?;
    let descending =
        q_pochhammer(&q.powi(ni)?, &qinv, m).checked_div(&q_pochhammer(&q.powi(mi)?, &qinv, m))?;
    let sign = if m.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    };
    let ascending = q_pochhammer(&q.powi(-ni)?, q, m).checked_div(&q_pochhammer(q, q, m))?
        * sign
        * q.powi(ni * mi - mi * (mi - 1) / 2)?;
    Ok(direct == descending && direct == ascending)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactRational, RationalFunction};
    use num_traits::{One, Zero};

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn q_integer_examples() {
        assert!(q_integer(0, &RationalFunction::q()).is_zero());
        assert_eq!(q_integer(4, &r(2, 1)), r(15, 1));
        for n in 0..=20 {
            assert_eq!(q_integer(n, &ExactRational::one()), r(n as i64, 1));
        }
    }

    #[test]
    fn q_pochhammer_examples() {
        let q = RationalFunction::q();
        assert!(q_pochhammer(&q, &q, 0).is_one());
        assert!(q_pochhammer(&q.powi(-2).unwrap(), &q, 3).is_zero());
        // (1 - 1/2)(1 - 1/6)
        assert_eq!(q_pochhammer(&r(1, 2), &r(1, 3), 2), r(5, 12));
    }

    #[test]
    fn q_binomial_examples() {
        let q = RationalFunction::q();
        for n in 0..6 {
            assert!(q_binomial(n, 0, &q).is_one());
        }
        assert_eq!(q_binomial(4, 2, &r(2, 1)), r(35, 1));
        assert!(q_binomial(3, 5, &q).is_zero());
        assert!(q_binomial(3, -1, &q).is_zero());
    }

    #[test]
    fn q_binomial_is_product_formula() {
        // [n m] = (q;q)_n / ((q;q)_m (q;q)_{n-m}) at a generic rational point
        let q = r(3, 7);
        for n in 0..9u32 {
            for m in 0..=n {
                let rhs = q_pochhammer(&q, &q, n)
                    .checked_div(&(q_pochhammer(&q, &q, m) * q_pochhammer(&q, &q, n - m)))
                    .unwrap();
                assert_eq!(q_binomial(n as i64, m as i64, &q), rhs);
            }
        }
    }

    #[test]
    fn inversion_identity_examples() {
        let q = RationalFunction::q();
        assert!(q_binomial_inversion_identity(5, 2, &q).unwrap());
        for n in 0..6 {
            assert!(q_binomial_inversion_identity(n, 0, &q).unwrap());
        }
        assert!(q_binomial_inversion_identity(8, 8, &q).unwrap());
    }

    #[test]
    fn q_binomial_at_one_is_binomial() {
        for n in 0..=12i64 {
            for m in 0..=n {
                let v = q_binomial(n, m, &ExactRational::one());
                assert_eq!(
                    v,
                    ExactRational::from_integer(crate::scalar::binomial(n, m))
                );
            }
        }
    }
}
