//! q-Racah, Racah, q-Hahn and Hahn polynomials, and the zonal spherical
//! values of the Grassmannian Gelfand pairs, as named terminating series.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qseries::{eval_series, SeriesParam, SeriesSpec};
use crate::scalar::{binomial, Scalar};
use crate::ExactRational;

/// Degree `s`, lattice index `z`, and the four q-Racah parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct QRacahParams<S> {
    pub s: u32,
    pub z: u32,
    pub a: SeriesParam<S>,
    pub b: SeriesParam<S>,
    pub c: SeriesParam<S>,
    pub d: SeriesParam<S>,
}

/// `R_s(mu(z); a, b, c, d; q) = 4phi3(q^-s, ab q^(s+1), q^-z, cd q^(z+1); aq, bdq, cq; q, q)`.
pub fn q_racah<S: Scalar>(p: &QRacahParams<S>, q: &S) -> Result<S> {
    let (s, z) = (p.s as i64, p.z as i64);
    let one = SeriesParam::QPow(0);
    let upper = vec![
        SeriesParam::QPow(-s),
        p.a.times(&p.b, s + 1, q)?,
        SeriesParam::QPow(-z),
        p.c.times(&p.d, z + 1, q)?,
    ];
    let lower = vec![
        p.a.times(&one, 1, q)?,
        p.b.times(&p.d, 1, q)?,
        p.c.times(&one, 1, q)?,
    ];
    eval_series(&SeriesSpec::basic(upper, lower, q.clone(), q.clone()))
}

/// Degree `s`, lattice index `y`, and the integer Racah parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RacahParams {
    pub s: u32,
    pub y: u32,
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub delta: i64,
}

/// `R_s(lambda(y); alpha, beta, gamma, delta)
///   = 4F3(-s, s+alpha+beta+1, -y, y+gamma+delta+1; alpha+1, beta+delta+1, gamma+1; 1)`.
pub fn racah(p: &RacahParams) -> Result<ExactRational> {
    let (s, y) = (p.s as i64, p.y as i64);
    let spec: SeriesSpec<ExactRational> = SeriesSpec::classical_integers(
        &[-s, s + p.alpha + p.beta + 1, -y, y + p.gamma + p.delta + 1],
        &[p.alpha + 1, p.beta + p.delta + 1, p.gamma + 1],
    );
    eval_series(&spec)
}

/// `Q_d(q^-z; alpha, beta, D; q) = 3phi2(q^-z, q^-d, alpha beta q^(d+1); alpha q, q^-D; q, q)`.
#[allow(non_snake_case)]
pub fn q_hahn<S: Scalar>(
    d: u32,
    z: u32,
    alpha: &SeriesParam<S>,
    beta: &SeriesParam<S>,
    D: u32,
    q: &S,
) -> Result<S> {
    if d > D {
        return Err(Error::OutOfRange {
            x: d as i64,
            max: D as i64,
        });
    }
    let upper = vec![
        SeriesParam::QPow(-(z as i64)),
        SeriesParam::QPow(-(d as i64)),
        alpha.times(beta, d as i64 + 1, q)?,
    ];
    let lower = vec![
        alpha.times(&SeriesParam::QPow(0), 1, q)?,
        SeriesParam::QPow(-(D as i64)),
    ];
    eval_series(&SeriesSpec::basic(upper, lower, q.clone(), q.clone()))
}

fn check_spherical_range(x: u32, i: u32, n: u32, m: u32) -> Result<()> {
    if 2 * m > n {
        return Err(Error::InvalidParams {
            n: n as i64,
            m: m as i64,
            k: 0,
            l: 0,
            constraint: "m <= n - m",
        });
    }
    for v in [x, i] {
        if v > m {
            return Err(Error::OutOfRange {
                x: v as i64,
                max: m as i64,
            });
        }
    }
    Ok(())
}

/// Value of the zonal spherical function `omega_x` on the double coset `K_i`
/// of the pair `(GL(n, F_q), P(m, n-m, F_q))`:
/// `3phi2(q^-i, q^-x, q^(x-n-1); q^-m, q^(m-n); q, q)`.
pub fn spherical_value<S: Scalar>(x: u32, i: u32, n: u32, m: u32, q: &S) -> Result<S> {
    check_spherical_range(x, i, n, m)?;
    let (x, i, n, m) = (x as i64, i as i64, n as i64, m as i64);
    eval_series(&SeriesSpec::basic_exponents(
        &[-i, -x, x - n - 1],
        &[-m, m - n],
        q,
    ))
}

/// The `q = 1` spherical value `omega_{(n-x,x)}(i)` for `(S_n, S_m x S_{n-m})`,
/// computed both as a Hahn `3F2` and as the alternating binomial sum
/// `binom(m,i)^-1 binom(n-m,i)^-1 sum_r (-1)^r binom(x,r) binom(m-x,i-r) binom(n-m-x,i-r)`.
pub fn spherical_value_limit(x: u32, i: u32, n: u32, m: u32) -> Result<ExactRational> {
    check_spherical_range(x, i, n, m)?;
    let (x, i, n, m) = (x as i64, i as i64, n as i64, m as i64);
    let hahn = eval_series(&SeriesSpec::<ExactRational>::classical_integers(
        &[-i, -x, x - n - 1],
        &[-m, m - n],
    ))?;
    let mut alt = ExactRational::zero();
    for r in 0..=i.min(x) {
        let term = binomial(x, r) * binomial(m - x, i - r) * binomial(n - m - x, i - r);
        let term = ExactRational::from_integer(term);
        if r % 2 == 0 {
            alt += term;
        } else {
            alt -= term;
        }
    }
    let norm = ExactRational::from_integer(binomial(m, i) * binomial(n - m, i));
    let alt = alt / norm;
    if hahn != alt {
        return Err(Error::InternalMismatch(format!(
            "spherical value x={x} i={i} n={n} m={m}: 3F2 gives {hahn}, alternating sum gives {alt}"
        )));
    }
    Ok(hahn)
}

/// `1` as a series parameter in exponent form.
pub fn unit<S>() -> SeriesParam<S> {
    SeriesParam::QPow(0)
}
