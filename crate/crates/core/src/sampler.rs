//! Inverse-cdf sampling against exact thresholds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::dist::{table_at, Params};
use crate::error::{Error, Result};
use crate::ExactRational;

/// Identifies the uniform source; part of every report. Bump on any change
/// that alters the draw stream for a fixed seed.
pub const RNG_ID: &str = "chacha8-rand_chacha0.3-seed_from_u64-v1";

/// A seeded sampler for one parameter point.
#[derive(Clone, Debug)]
pub struct SamplerState {
    pub params: Params,
    pub q: ExactRational,
    pub seed: u64,
    pub stream: u64,
    pub pmf: Vec<ExactRational>,
    pub cdf: Vec<ExactRational>,
    /// `ceil(cdf[x] * 2^64)`; `j / 2^64 < cdf[x]` iff `j < bound[x]` for integer `j`.
    bounds: Vec<u128>,
    rng: ChaCha8Rng,
}

fn dyadic_bound(c: &ExactRational) -> u128 {
    let scaled = c.numer() << 64u32;
    let (quot, rem) = scaled.div_rem(c.denom());
    let ceil = if rem.is_zero() { quot } else { quot + 1 };
    ceil.to_u128().expect("cdf lies in [0, 1]")
}

pub fn build_sampler(p: &Params, q: &ExactRational, seed: u64) -> Result<SamplerState> {
    let table = table_at(p, q)?;
    if let Some((x, v)) = table.first_negative() {
        return Err(Error::NegativeMass {
            x,
            value: v.to_string(),
        });
    }
    let bounds = table.cdf.iter().map(dyadic_bound).collect();
    Ok(SamplerState {
        params: *p,
        q: q.clone(),
        seed,
        stream: 0,
        pmf: table.pmf,
        cdf: table.cdf,
        bounds,
        rng: ChaCha8Rng::seed_from_u64(seed),
    })
}

impl SamplerState {
    pub fn rng_id(&self) -> &'static str {
        RNG_ID
    }

    /// A fresh state on an independent stream of the same seed.
    pub fn fork(&self, stream: u64) -> SamplerState {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        SamplerState {
            stream,
            rng,
            ..self.clone()
        }
    }

    pub fn draw_one(&mut self) -> u32 {
        let j = self.rng.next_u64() as u128;
        self.bounds.partition_point(|&b| b <= j) as u32
    }

    pub fn draw(&mut self, count: usize) -> Vec<u32> {
        (0..count).map(|_| self.draw_one()).collect()
    }
}

/// Empirical statistics of a sample against the exact pmf.
#[derive(Clone, Debug, PartialEq)]
pub struct EmpiricalSummary {
    pub count: u64,
    pub frequencies: Vec<u64>,
    pub mean: ExactRational,
    pub variance: ExactRational,
    pub exact_mean: ExactRational,
    pub exact_variance: ExactRational,
    /// `max_x |freq[x]/count - pmf[x]|`.
    pub max_abs_diff: ExactRational,
    /// Pearson statistic over cells with positive mass.
    pub chi_square: ExactRational,
    pub degrees_of_freedom: u32,
    /// Draws that landed where the exact pmf is zero.
    pub off_support: u64,
}

impl EmpiricalSummary {
    /// `|mean - exact_mean| / sqrt(exact_variance / count)`.
    pub fn mean_z_score(&self) -> f64 {
        let diff = (&self.mean - &self.exact_mean)
            .abs()
            .to_f64()
            .unwrap_or(f64::NAN);
        let se = (self.exact_variance.to_f64().unwrap_or(f64::NAN) / self.count as f64).sqrt();
        if se == 0.0 {
            if diff == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            diff / se
        }
    }

    pub fn chi_square_f64(&self) -> f64 {
        self.chi_square.to_f64().unwrap_or(f64::NAN)
    }
}

fn int(v: u64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

pub fn empirical_summary(draws: &[u32], pmf: &[ExactRational]) -> Result<EmpiricalSummary> {
    if draws.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut frequencies = vec![0u64; pmf.len()];
    for &x in draws {
        let Some(slot) = frequencies.get_mut(x as usize) else {
            return Err(Error::OutOfRange {
                x: x as i64,
                max: pmf.len() as i64 - 1,
            });
        };
        *slot += 1;
    }
    let count = draws.len() as u64;
    let n = int(count);
    let moment = |power: u32| -> ExactRational {
        frequencies
            .iter()
            .enumerate()
            .fold(ExactRational::zero(), |acc, (x, &f)| {
                acc + int(f) * int((x as u64).pow(power))
            })
            / &n
    };
    let exact_moment = |power: u32| -> ExactRational {
        pmf.iter()
            .enumerate()
            .fold(ExactRational::zero(), |acc, (x, p)| {
                acc + p * int((x as u64).pow(power))
            })
    };
    let mean = moment(1);
    let variance = moment(2) - &mean * &mean;
    let exact_mean = exact_moment(1);
    let exact_variance = exact_moment(2) - &exact_mean * &exact_mean;

    let mut max_abs_diff = ExactRational::zero();
    let mut chi_square = ExactRational::zero();
    let mut cells = 0u32;
    let mut off_support = 0u64;
    for (p, &f) in pmf.iter().zip(&frequencies) {
        let d = (int(f) / &n - p).abs();
        if d > max_abs_diff {
            max_abs_diff = d;
        }
        if p.is_positive() {
            let expected = p * &n;
            let dev = int(f) - &expected;
            chi_square += &dev * &dev / expected;
            cells += 1;
        } else {
            off_support += f;
        }
    }
    Ok(EmpiricalSummary {
        count,
        frequencies,
        mean,
        variance,
        exact_mean,
        exact_variance,
        max_abs_diff,
        chi_square,
        degrees_of_freedom: cells.saturating_sub(1),
        off_support,
    })
}
