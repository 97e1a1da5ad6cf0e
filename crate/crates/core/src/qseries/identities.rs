//! Both sides of the classical summation and transformation formulas the
//! distribution identities rest on. Callers compare the returned pairs.

use super::q_pochhammer;
use super::series::{eval_series, SeriesParam, SeriesSpec};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// q-Chu-Vandermonde: `2phi1(q^-a, b; c; q, c q^a / b)` against
/// `(c/b; q)_a / (c; q)_a`.
pub fn q_chu_vandermonde<S: Scalar>(a: u32, b: &S, c: &S, q: &S) -> Result<(S, S)> {
    let z = c.clone() * q.powi(a as i64)?;
    let z = z.checked_div(b)?;
    let spec = SeriesSpec::basic(
        vec![
            SeriesParam::QPow(-(a as i64)),
            SeriesParam::Value(b.clone()),
        ],
        vec![SeriesParam::Value(c.clone())],
        q.clone(),
        z,
    );
    let lhs = eval_series(&spec)?;
    let c_over_b = c.checked_div(b)?;
    let den = q_pochhammer(c, q, a);
    if den.is_zero() {
        return Err(Error::ZeroLowerParameter {
            index: 0,
            term: a as usize,
        });
    }
    let rhs = q_pochhammer(&c_over_b, q, a).checked_div(&den)?;
    Ok((lhs, rhs))
}

/// Sears' transformation of a terminating balanced `4phi3`:
///
/// ```text
/// 4phi3(q^-s, a, b, c; d, e, f; q, q)
///   = (e/a, de/bc; q)_s / (e, de/abc; q)_s
///     * 4phi3(q^-s, a, d/b, d/c; d, de/bc, q^(1-s) a/e; q, q)
/// ```
///
/// valid when `abc = def q^(s-1)`. Fails with [`Error::ZeroLowerParameter`]
/// when any denominator Pochhammer symbol of length `s` vanishes.
#[allow(clippy::too_many_arguments)]
pub fn sears_43<S: Scalar>(
    s: u32,
    a: &SeriesParam<S>,
    b: &SeriesParam<S>,
    c: &SeriesParam<S>,
    d: &SeriesParam<S>,
    e: &SeriesParam<S>,
    f: &SeriesParam<S>,
    q: &S,
) -> Result<(S, S)> {
    let si = s as i64;
    let abc = a.times(b, 0, q)?.times(c, 0, q)?;
    let defq = d.times(e, 0, q)?.times(f, si - 1, q)?;
    let balanced = match (&abc, &defq) {
        (SeriesParam::QPow(x), SeriesParam::QPow(y)) => x == y,
        _ => abc.basic_value(q)? == defq.basic_value(q)?,
    };
    if !balanced {
        return Err(Error::BalanceViolation(format!(
            "abc = {abc:?} but def q^(s-1) = {defq:?}"
        )));
    }
    let top = SeriesParam::QPow(-si);
    let de = d.times(e, 0, q)?;
    let bc = b.times(c, 0, q)?;
    let de_bc = de.over(&bc, 0, q)?;
    let de_abc = de_bc.over(a, 0, q)?;
    let last_lower = a.over(e, 1 - si, q)?;
    // both sides are rational in the parameters with these Pochhammer
    // symbols of length s as denominators; an upper parameter terminating
    // the series early does not lift the restriction
    for (index, lower) in [d, e, f, &last_lower, &de_abc].into_iter().enumerate() {
        if q_pochhammer(&lower.basic_value(q)?, q, s).is_zero() {
            return Err(Error::ZeroLowerParameter {
                index,
                term: s as usize,
            });
        }
    }
    let lhs = eval_series(&SeriesSpec::basic(
        vec![top.clone(), a.clone(), b.clone(), c.clone()],
        vec![d.clone(), e.clone(), f.clone()],
        q.clone(),
        q.clone(),
    ))?;

    // right side with (de/bc; q)_s / (de/bc; q)_i folded into
    // (de/bc q^i; q)_(s-i), so de/bc = q^-j with j < s stays finite
    let uppers = [top, a.clone(), d.over(b, 0, q)?, d.over(c, 0, q)?]
        .iter()
        .map(|p| p.basic_value(q))
        .collect::<Result<Vec<S>>>()?;
    let lowers = [d.clone(), last_lower, SeriesParam::QPow(1)]
        .iter()
        .map(|p| p.basic_value(q))
        .collect::<Result<Vec<S>>>()?;
    let de_bc = de_bc.basic_value(q)?;
    let mut sum = S::zero();
    let mut ratio = S::one();
    let mut q_i = S::one();
    for i in 0..=s {
        if i > 0 {
            let shift = q.powi(i as i64 - 1)?;
            for u in &uppers {
                ratio = ratio * (S::one() - u.clone() * shift.clone());
            }
            let mut den = S::one();
            for l in &lowers {
                den = den * (S::one() - l.clone() * shift.clone());
            }
            ratio = ratio.checked_div(&den)? * q.clone();
            q_i = q_i * q.clone();
        }
        if ratio.is_zero() {
            break;
        }
        let tail = q_pochhammer(&(de_bc.clone() * q_i.clone()), q, s - i);
        sum = sum + ratio.clone() * tail;
    }
    let e_a = e.over(a, 0, q)?;
    let prefactor = q_pochhammer(&e_a.basic_value(q)?, q, s).checked_div(
        &(q_pochhammer(&e.basic_value(q)?, q, s) * q_pochhammer(&de_abc.basic_value(q)?, q, s)),
    )?;
    let rhs = prefactor * sum;
    Ok((lhs, rhs))
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
    fn chu_trivial_and_distribution_instance() {
        let q = RationalFunction::q();
        let (l, rr) = q_chu_vandermonde(0, &q.powi(3).unwrap(), &q.powi(-2).unwrap(), &q).unwrap();
        assert!(l.is_one() && rr.is_one());
        // (a,b,c) = (M-r, q^(r-N), q^(r+1)), M=3, N=2, r=1
        let (l, rr) = q_chu_vandermonde(2, &q.powi(-1).unwrap(), &q.powi(2).unwrap(), &q).unwrap();
        assert_eq!(l, rr);
    }

    #[test]
    fn chu_numeric_point() {
        let q = r(2, 5);
        let (l, rr) = q_chu_vandermonde(2, &r(1, 2), &r(1, 3), &q).unwrap();
        // independent: two-term sum by hand
        // term1 = (1-q^-2)(1-b)/((1-q)(1-c)) * z,  z = c q^2 / b
        let one = ExactRational::one();
        let z = r(1, 3) * q.clone() * q.clone() / r(1, 2);
        let qm2 = one.clone() / (q.clone() * q.clone());
        let t1 = (one.clone() - qm2.clone()) * (one.clone() - r(1, 2))
            / ((one.clone() - q.clone()) * (one.clone() - r(1, 3)))
            * z.clone();
        let t2 = t1.clone() * (one.clone() - qm2 * q.clone()) * (one.clone() - r(1, 2) * q.clone())
            / ((one.clone() - q.clone() * q.clone()) * (one.clone() - r(1, 3) * q.clone()))
            * z;
        assert_eq!(l, one + t1 + t2);
        assert_eq!(l, rr);
    }

    #[test]
    fn sears_rejects_vanishing_denominators() {
        // c = q^-1 stops the left side at i = 1, but (q^-1; q)_2 = 0 sits in
        // its denominator; the pair of sides differs there
        let q = RationalFunction::q();
        let p = |e| SeriesParam::QPow(e);
        let r = sears_43(2, &p(-3), &p(-3), &p(-1), &p(-1), &p(-3), &p(-4), &q);
        assert!(matches!(r, Err(Error::ZeroLowerParameter { .. })));
    }

    #[test]
    fn sears_s_zero() {
        let q = RationalFunction::q();
        let p = |e| SeriesParam::QPow(e);
        let (l, rr) = sears_43(0, &p(1), &p(2), &p(3), &p(4), &p(5), &p(-2), &q).unwrap();
        assert!(l.is_one() && rr.is_one());
    }

    #[test]
    fn sears_vanishing_instance() {
        // (n,m,k,l) = (6,2,1,1), x = 2: M = 1, N = 4
        let (n, m, k, x) = (6i64, 2i64, 1i64, 2u32);
        let (mm, nn) = (1i64, 4i64);
        let q = RationalFunction::q();
        let p = |e| SeriesParam::QPow(e);
        let (l, rr) = sears_43(
            x,
            &p(x as i64 - n - 1),
            &p(-mm),
            &p(-nn),
            &p(-m),
            &p(m - n),
            &p(-mm - nn),
            &q,
        )
        .unwrap();
        assert!(rr.is_zero());
        assert_eq!(l, rr);
        // the vanishing factor is (de/bc; q)_x = (q^-k; q)_x
        assert!(q_pochhammer(&q.powi(-k).unwrap(), &q, x).is_zero());
    }

    #[test]
    fn sears_balance_violation() {
        let q = RationalFunction::q();
        let p = |e| SeriesParam::QPow(e);
        let err = sears_43(2, &p(1), &p(1), &p(1), &p(1), &p(1), &p(1), &q).unwrap_err();
        assert!(matches!(err, Error::BalanceViolation(_)));
    }

    #[test]
    fn sears_numeric_balanced_tuple() {
        let q = r(3, 2);
        let v = |x: ExactRational| SeriesParam::Value(x);
        // pick a, b, c, d, e freely, solve f from abc = def q^(s-1), s = 2
        let (a, b, c, d, e) = (r(1, 3), r(5, 7), r(2, 9), r(4, 5), r(7, 3));
        let f = a.clone() * b.clone() * c.clone() / (d.clone() * e.clone() * q.clone());
        let (l, rr) = sears_43(2, &v(a), &v(b), &v(c), &v(d), &v(e), &v(f), &q).unwrap();
        assert_eq!(l, rr);
    }
}
