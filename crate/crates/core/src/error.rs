use thiserror::Error;

/// Errors raised by the exact evaluation layer and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("lower parameter {index} vanishes at term {term} of a terminating series")]
    ZeroLowerParameter { index: usize, term: usize },

    #[error("series does not terminate: no upper parameter of the form q^-s (or -s)")]
    NonTerminating,

    #[error("balance condition violated: {0}")]
    BalanceViolation(String),

    #[error("invalid parameters (n,m,k,l)=({n},{m},{k},{l}): {constraint} is violated")]
    InvalidParams {
        n: i64,
        m: i64,
        k: i64,
        l: i64,
        constraint: &'static str,
    },

    #[error("x={x} is outside the support range 0..={max}")]
    OutOfRange { x: i64, max: i64 },

    #[error("printed recurrence coefficient has a zero denominator at n={n}, x={x}")]
    DenominatorZero { n: u32, x: u32 },

    #[error("two printed forms disagree: {0}")]
    InternalMismatch(String),

    #[error("selection rule violated: {0}")]
    SelectionRuleViolation(String),

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("negative probability mass {value} at x={x}")]
    NegativeMass { x: u32, value: String },

    #[error("empty sample")]
    EmptySample,

    #[error("invalid q: {0}")]
    InvalidQ(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
