//! Exact arithmetic for the q-Racah probability distribution `P_{n,m,k,l;q}`.
//!
//! Every formula is generic over [`Scalar`]: evaluate at a concrete rational
//! `q` with [`ExactRational`], certify identities in `Q(q)` with
//! [`RationalFunction`], or approximate with `f64`. The `q = 1` limit
//! distribution lives beside the q-deformed one in [`dist`], and [`oracles`]
//! recomputes the same numbers by structurally independent routes.

pub mod dist;
pub mod error;
pub mod oracles;
pub mod poly;
pub mod polyfamilies;
pub mod qseries;
pub mod ratfunc;
pub mod sampler;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use poly::IntPoly;
pub use ratfunc::RationalFunction;
pub use scalar::Scalar;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Series over concrete rationals.
pub type ExactSeries = qseries::SeriesSpec<ExactRational>;
/// Series over the formal variable.
pub type FormalSeries = qseries::SeriesSpec<RationalFunction>;
/// Display-only float series.
pub type FloatSeries = qseries::SeriesSpec<f64>;

/// pmf/cdf table at a concrete rational `q`.
pub type ExactTable = dist::DistTable<ExactRational>;
/// pmf/cdf table with entries in `Q(q)`.
pub type FormalTable = dist::DistTable<RationalFunction>;

/// Library version, embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
