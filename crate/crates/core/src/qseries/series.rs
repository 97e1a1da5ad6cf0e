use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A series parameter. Exponent form `q^e` is kept symbolic so termination
/// can be read off exactly; in a classical series it stands for the integer `e`
/// (the `q -> 1` shadow of `q^e`).
#[derive(Clone, Debug, PartialEq)]
pub enum SeriesParam<S> {
    QPow(i64),
    Value(S),
}

impl<S: Scalar> SeriesParam<S> {
    /// The numeric value in a basic series with base `q`.
    pub fn basic_value(&self, q: &S) -> Result<S> {
        match self {
            SeriesParam::QPow(e) => q.powi(*e),
            SeriesParam::Value(v) => Ok(v.clone()),
        }
    }

    /// The numeric value in a classical series.
    pub fn classical_value(&self) -> S {
        match self {
            SeriesParam::QPow(e) => S::from_i64(*e),
            SeriesParam::Value(v) => v.clone(),
        }
    }

    /// `self * other * q^shift`, staying in exponent form when both factors are.
    pub fn times(&self, other: &Self, shift: i64, q: &S) -> Result<Self> {
        Ok(match (self, other) {
            (SeriesParam::QPow(a), SeriesParam::QPow(b)) => SeriesParam::QPow(a + b + shift),
            _ => SeriesParam::Value(self.basic_value(q)? * other.basic_value(q)? * q.powi(shift)?),
        })
    }

    /// `self / other * q^shift`, staying in exponent form when both are.
    pub fn over(&self, other: &Self, shift: i64, q: &S) -> Result<Self> {
        Ok(match (self, other) {
            (SeriesParam::QPow(a), SeriesParam::QPow(b)) => SeriesParam::QPow(a - b + shift),
            _ => SeriesParam::Value(
                self.basic_value(q)?.checked_div(&other.basic_value(q)?)? * q.powi(shift)?,
            ),
        })
    }

    fn terminating_index(&self) -> Option<u32> {
        match self {
            SeriesParam::QPow(e) if *e <= 0 => u32::try_from(-e).ok(),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SeriesKind<S> {
    /// `r phi s` with the given base.
    Basic { q: S },
    /// `r F s`.
    Classical,
}

/// A terminating hypergeometric series `r phi s (upper; lower; q, z)` or
/// `r F s (upper; lower; z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSpec<S> {
    pub upper: Vec<SeriesParam<S>>,
    pub lower: Vec<SeriesParam<S>>,
    pub kind: SeriesKind<S>,
    pub argument: S,
}

impl<S: Scalar> SeriesSpec<S> {
    pub fn basic(
        upper: Vec<SeriesParam<S>>,
        lower: Vec<SeriesParam<S>>,
        q: S,
        argument: S,
    ) -> Self {
        SeriesSpec {
            upper,
            lower,
            kind: SeriesKind::Basic { q },
            argument,
        }
    }

    pub fn classical(upper: Vec<SeriesParam<S>>, lower: Vec<SeriesParam<S>>, argument: S) -> Self {
        SeriesSpec {
            upper,
            lower,
            kind: SeriesKind::Classical,
            argument,
        }
    }

    /// All-exponent basic series with argument `q`, the shape used throughout.
    pub fn basic_exponents(upper: &[i64], lower: &[i64], q: &S) -> Self {
        Self::basic(
            upper.iter().map(|&e| SeriesParam::QPow(e)).collect(),
            lower.iter().map(|&e| SeriesParam::QPow(e)).collect(),
            q.clone(),
            q.clone(),
        )
    }

    /// Integer-parameter classical series with argument 1.
    pub fn classical_integers(upper: &[i64], lower: &[i64]) -> Self {
        Self::classical(
            upper.iter().map(|&e| SeriesParam::QPow(e)).collect(),
            lower.iter().map(|&e| SeriesParam::QPow(e)).collect(),
            S::one(),
        )
    }

    /// The smallest `s` with an upper parameter `q^-s` (or `-s`); the last
    /// summed index.
    pub fn termination_index(&self) -> Result<u32> {
        self.upper
            .iter()
            .filter_map(SeriesParam::terminating_index)
            .min()
            .ok_or(Error::NonTerminating)
    }
}

/// Sums a terminating series exactly, term ratio by term ratio.
///
/// The basic kind includes the `((-1)^i q^binom(i,2))^(1+s-r)` factor for every
/// shape. Lower parameters are checked for vanishing Pochhammer factors at
/// every term up to the termination index, and only there.
pub fn eval_series<S: Scalar>(spec: &SeriesSpec<S>) -> Result<S> {
    let last = spec.termination_index()?;
    let mut term = S::one();
    let mut sum = S::one();
    match &spec.kind {
        SeriesKind::Basic { q } => {
            let up: Vec<S> = spec
                .upper
                .iter()
                .map(|p| p.basic_value(q))
                .collect::<Result<_>>()?;
            let low: Vec<S> = spec
                .lower
                .iter()
                .map(|p| p.basic_value(q))
                .collect::<Result<_>>()?;
            let twist = 1 + low.len() as i64 - up.len() as i64;
            let mut qi = S::one();
            for i in 0..last {
                let mut num = spec.argument.clone();
                for a in &up {
                    num = num * (S::one() - a.clone() * qi.clone());
                }
                if twist != 0 {
                    num = num * (-qi.clone()).powi(twist)?;
                }
                let qnext = qi.clone() * q.clone();
                let mut den = S::one() - qnext.clone();
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                for (index, b) in low.iter().enumerate() {
                    let f = S::one() - b.clone() * qi.clone();
                    if f.is_zero() {
                        return Err(Error::ZeroLowerParameter {
                            index,
                            term: i as usize + 1,
                        });
                    }
                    den = den * f;
                }
                term = (term * num).checked_div(&den)?;
                sum = sum + term.clone();
                qi = qnext;
            }
        }
        SeriesKind::Classical => {
            let up: Vec<S> = spec
                .upper
                .iter()
                .map(SeriesParam::classical_value)
                .collect();
            let low: Vec<S> = spec
                .lower
                .iter()
                .map(SeriesParam::classical_value)
                .collect();
            for i in 0..last {
                let shift = S::from_i64(i as i64);
                let mut num = spec.argument.clone();
                for a in &up {
                    num = num * (a.clone() + shift.clone());
                }
                let mut den = S::from_i64(i as i64 + 1);
                for (index, b) in low.iter().enumerate() {
                    let f = b.clone() + shift.clone();
                    if f.is_zero() {
                        return Err(Error::ZeroLowerParameter {
                            index,
                            term: i as usize + 1,
                        });
                    }
                    den = den * f;
                }
                term = (term * num).checked_div(&den)?;
                sum = sum + term.clone();
            }
        }
    }
    Ok(sum)
}
