//! Identity suites over the parameter grid. Every suite walks its cases in
//! parallel, keeps them in grid order, and reports counts plus the first
//! counterexample.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dist::{
    cdf_limit, cdf_q, cdf_summation_identity, pmf_limit, pmf_limit_direct, pmf_limit_hahn_form,
    pmf_q, pmf_q_direct, pmf_q_hahn_form, recurrence_residual, recurrence_residual_with,
    support_limit, Params, RecurrenceForm,
};
use crate::error::{Error, Result};
use crate::oracles::{
    count_intersection_pairs, count_relative_position, enumerate_subspaces,
    is_orthogonal_projector, pmf_cg_oracle, pmf_tensor_oracle_all, projector_matrix,
    relative_grassmannian,
};
use crate::qseries::{q_binomial, q_chu_vandermonde, sears_43, SeriesParam};
use crate::{ExactRational, RationalFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// Result of one check.
#[derive(Clone, Debug, PartialEq)]
pub enum Check {
    Holds,
    Fails(String),
    /// Outside the identity's domain; not counted as checked.
    Excluded(String),
}

/// Aggregate of a suite.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub name: String,
    pub status: Status,
    pub checked: usize,
    pub failed: usize,
    pub excluded: usize,
    pub first_counterexample: Option<String>,
    /// Up to a handful of excluded cases, verbatim.
    pub excluded_examples: Vec<String>,
    pub note: Option<String>,
}

impl SuiteOutcome {
    fn from_checks(name: &str, checks: Vec<(String, Check)>) -> Self {
        let mut out = SuiteOutcome {
            name: name.to_string(),
            status: Status::Pass,
            checked: 0,
            failed: 0,
            excluded: 0,
            first_counterexample: None,
            excluded_examples: Vec::new(),
            note: None,
        };
        for (label, check) in checks {
            match check {
                Check::Holds => out.checked += 1,
                Check::Fails(why) => {
                    out.checked += 1;
                    out.failed += 1;
                    if out.first_counterexample.is_none() {
                        out.first_counterexample = Some(format!("{label}: {why}"));
                    }
                }
                Check::Excluded(why) => {
                    out.excluded += 1;
                    if out.excluded_examples.len() < 8 {
                        out.excluded_examples.push(format!("{label}: {why}"));
                    }
                }
            }
        }
        out.status = if out.failed > 0 {
            Status::Fail
        } else if out.checked == 0 {
            Status::Skipped
        } else {
            Status::Pass
        };
        out
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn detail(&self) -> String {
        let mut s = format!("{} checked, {} failed", self.checked, self.failed);
        if self.excluded > 0 {
            s.push_str(&format!(", {} skipped", self.excluded));
        }
        if let Some(c) = &self.first_counterexample {
            s.push_str(&format!("; first counterexample {c}"));
        }
        if let Some(n) = &self.note {
            s.push_str(&format!("; {n}"));
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Sum1,
    Presentations,
    Cdf,
    Symmetry,
    Vanishing,
    Recurrence,
    Support,
    Chu,
    Sears,
    CdfSum,
    Limit,
    Positivity,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Sum1,
        Suite::Presentations,
        Suite::Cdf,
        Suite::Symmetry,
        Suite::Vanishing,
        Suite::Recurrence,
        Suite::Support,
        Suite::Chu,
        Suite::Sears,
        Suite::CdfSum,
        Suite::Limit,
        Suite::Positivity,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Sum1 => "sum1",
            Suite::Presentations => "presentations",
            Suite::Cdf => "cdf",
            Suite::Symmetry => "symmetry",
            Suite::Vanishing => "vanishing",
            Suite::Recurrence => "recurrence",
            Suite::Support => "support",
            Suite::Chu => "chu",
            Suite::Sears => "sears",
            Suite::CdfSum => "cdf-sum",
            Suite::Limit => "limit",
            Suite::Positivity => "positivity",
        }
    }

    pub fn run(&self, nmax: u32) -> SuiteOutcome {
        match self {
            Suite::Sum1 => sum1(nmax),
            Suite::Presentations => presentations(nmax),
            Suite::Cdf => cdf(nmax),
            Suite::Symmetry => symmetry(nmax),
            Suite::Vanishing => vanishing(nmax),
            Suite::Recurrence => recurrence(nmax),
            Suite::Support => support(nmax),
            Suite::Chu => chu(6, 6),
            Suite::Sears => sears(4, &SEARS_EXPONENTS),
            Suite::CdfSum => cdf_sum(nmax),
            Suite::Limit => limit(nmax),
            Suite::Positivity => positivity(nmax, &PRIME_POWERS),
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .find(|v| v.name() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub const PRIME_POWERS: [i64; 7] = [2, 3, 4, 5, 7, 8, 9];

/// Exponent grid for the free Sears parameters `a, b, c, d, e`.
pub const SEARS_EXPONENTS: [i64; 7] = [-3, -2, -1, 1, 2, 3, 4];

fn formal_q() -> RationalFunction {
    RationalFunction::q()
}

fn check_eq<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Check {
    if lhs == rhs {
        Check::Holds
    } else {
        Check::Fails(format!("{lhs} != {rhs}"))
    }
}

fn from_result(r: Result<Check>) -> Check {
    r.unwrap_or_else(|e| Check::Fails(format!("error: {e}")))
}

/// Runs `f` over `cases` in parallel, preserving order.
fn run_cases<T: Sync, F>(name: &str, cases: &[T], f: F) -> SuiteOutcome
where
    F: Fn(&T) -> Vec<(String, Check)> + Sync,
{
    let checks: Vec<(String, Check)> = cases.par_iter().flat_map_iter(&f).collect();
    SuiteOutcome::from_checks(name, checks)
}

/// `sum_x p(x; q) = 1` in `Q(q)`.
pub fn sum1(nmax: u32) -> SuiteOutcome {
    let q = formal_q();
    run_cases("sum1", &Params::restricted_set(nmax), |p| {
        let c = (|| {
            let mut total = RationalFunction::zero();
            for x in 0..=p.m {
                total = total + pmf_q(p, x, &q)?;
            }
            Ok(check_eq(&total, &RationalFunction::one()))
        })();
        vec![(p.to_string(), from_result(c))]
    })
}

/// q-Racah = direct 4phi3 = q-Hahn in `Q(q)`; Racah = direct 4F3 = Hahn at `q = 1`.
pub fn presentations(nmax: u32) -> SuiteOutcome {
    let q = formal_q();
    run_cases("presentations", &Params::restricted_set(nmax), |p| {
        (0..=p.m)
            .map(|x| {
                let c = (|| {
                    let racah = pmf_q(p, x, &q)?;
                    let direct = pmf_q_direct(p, x, &q)?;
                    let hahn = pmf_q_hahn_form(p, x, &q)?;
                    if racah != direct {
                        return Ok(Check::Fails(format!("q-Racah {racah} != direct {direct}")));
                    }
                    if racah != hahn {
                        return Ok(Check::Fails(format!("q-Racah {racah} != q-Hahn {hahn}")));
                    }
                    let lr = pmf_limit(p, x)?;
                    let ld = pmf_limit_direct(p, x)?;
                    let lh = pmf_limit_hahn_form(p, x)?;
                    if lr != ld || lr != lh {
                        return Ok(Check::Fails(format!(
                            "q=1: Racah {lr}, direct {ld}, Hahn {lh}"
                        )));
                    }
                    Ok(Check::Holds)
                })();
                (format!("{p} x={x}"), from_result(c))
            })
            .collect()
    })
}

/// Closed cdf against the running pmf sum, in `Q(q)` and at `q = 1`.
pub fn cdf(nmax: u32) -> SuiteOutcome {
    let q = formal_q();
    run_cases("cdf", &Params::restricted_set(nmax), |p| {
        let mut running = RationalFunction::zero();
        let mut running_limit = ExactRational::zero();
        let mut out = Vec::new();
        for x in 0..=p.m {
            let c = (|| {
                running = running.clone() + pmf_q(p, x, &q)?;
                running_limit = running_limit.clone() + pmf_limit(p, x)?;
                let closed = cdf_q(p, x, &q)?;
                if closed != running {
                    return Ok(Check::Fails(format!(
                        "closed {closed} != running {running}"
                    )));
                }
                Ok(check_eq(&cdf_limit(p, x)?, &running_limit))
            })();
            out.push((format!("{p} x={x}"), from_result(c)));
        }
        out
    })
}

/// `p(x | n,m,k,l) = p(x | n,n-m,k,k-l)` over the relaxed set.
pub fn symmetry(nmax: u32) -> SuiteOutcome {
    let q = formal_q();
    run_cases("symmetry", &Params::relaxed_set(nmax), |p| {
        let mirror = p.mirrored();
        (0..=p.x_max())
            .map(|x| {
                let c = (|| Ok(check_eq(&pmf_q(p, x, &q)?, &pmf_q(&mirror, x, &q)?)))();
                (format!("{p} x={x}"), from_result(c))
            })
            .collect()
    })
}

/// `p(x; q) = 0` in `Q(q)` for `k < x <= m`.
pub fn vanishing(nmax: u32) -> SuiteOutcome {
    let q = formal_q();
    run_cases("vanishing", &Params::restricted_set(nmax), |p| {
        (p.k + 1..=p.m)
            .map(|x| {
                let c = (|| Ok(check_eq(&pmf_q(p, x, &q)?, &RationalFunction::zero())))();
                (format!("{p} x={x}"), from_result(c))
            })
            .collect()
    })
}

/// Three-term recurrence at `q = 1`. The weights as printed do not give a
/// vanishing residual; the note counts how many points they miss.
pub fn recurrence(nmax: u32) -> SuiteOutcome {
    let cases = Params::restricted_set(nmax);
    let mut out = run_cases("recurrence", &cases, |p| {
        (0..=p.m)
            .map(|x| {
                let c = match recurrence_residual(p, x) {
                    Ok(r) => check_eq(&r, &ExactRational::zero()),
                    Err(Error::DenominatorZero { n, x }) => {
                        Check::Excluded(format!("a_x denominator n-2x = 0 (n={n}, x={x})"))
                    }
                    Err(e) => Check::Fails(format!("error: {e}")),
                };
                (format!("{p} x={x}"), c)
            })
            .collect()
    });
    let printed_misses: usize = cases
        .par_iter()
        .map(|p| {
            (0..=p.m)
                .filter(|&x| {
                    matches!(
                        recurrence_residual_with(p, x, RecurrenceForm::Printed),
                        Ok(r) if !r.is_zero()
                    )
                })
                .count()
        })
        .sum();
    out.note = Some(format!(
        "weights (n-y+1)/(n-2y+1); the printed reciprocal weights leave a nonzero residual at {printed_misses} of {} points",
        out.checked
    ));
    out
}

/// At `q = 1`, `p(x) > 0` exactly on `{0..min(k,m)}`.
pub fn support(nmax: u32) -> SuiteOutcome {
    run_cases("support", &Params::restricted_set(nmax), |p| {
        let set = support_limit(p);
        (0..=p.m)
            .map(|x| {
                let c = (|| {
                    let v = pmf_limit(p, x)?;
                    let ok = if set.contains(&x) {
                        v.is_positive()
                    } else {
                        v.is_zero()
                    };
                    Ok(if ok {
                        Check::Holds
                    } else {
                        Check::Fails(format!("p({x}) = {v}, support {set:?}"))
                    })
                })();
                (format!("{p} x={x}"), from_result(c))
            })
            .collect()
    })
}

/// q-Chu-Vandermonde for `a <= amax` with `b = q^beta`, `c = q^gamma`,
/// `|beta|, |gamma| <= range`. Points where `(c; q)_a` vanishes are skipped.
pub fn chu(amax: u32, range: i64) -> SuiteOutcome {
    let q = formal_q();
    let mut cases = Vec::new();
    for a in 0..=amax {
        for beta in -range..=range {
            for gamma in -range..=range {
                cases.push((a, beta, gamma));
            }
        }
    }
    run_cases("chu", &cases, |&(a, beta, gamma)| {
        let label = format!("a={a} b=q^{beta} c=q^{gamma}");
        let c = (|| {
            let b = SeriesParam::QPow(beta).basic_value(&q)?;
            let c = SeriesParam::QPow(gamma).basic_value(&q)?;
            match q_chu_vandermonde(a, &b, &c, &q) {
                Ok((l, r)) => Ok(check_eq(&l, &r)),
                Err(e @ Error::ZeroLowerParameter { .. }) => Ok(Check::Excluded(e.to_string())),
                Err(e) => Err(e),
            }
        })();
        vec![(label, from_result(c))]
    })
}

/// Sears' transformation over balanced exponent tuples: `a, b, c, d, e`
/// range over `grid`, `f` is fixed by balance, `s <= smax`. Tuples where a
/// lower parameter or a prefactor denominator vanishes are skipped.
pub fn sears(smax: u32, grid: &[i64]) -> SuiteOutcome {
    let q = formal_q();
    let mut cases = Vec::new();
    for s in 0..=smax as i64 {
        for &a in grid {
            for &b in grid {
                for &c in grid {
                    for &d in grid {
                        for &e in grid {
                            cases.push((s, [a, b, c, d, e, a + b + c - d - e - s + 1]));
                        }
                    }
                }
            }
        }
    }
    run_cases("sears", &cases, |&(s, ex)| {
        let label = format!("s={s} exponents={ex:?}");
        let p = |i: usize| SeriesParam::QPow(ex[i]);
        let c = match sears_43(s as u32, &p(0), &p(1), &p(2), &p(3), &p(4), &p(5), &q) {
            Ok((l, r)) => check_eq(&l, &r),
            Err(e @ (Error::ZeroLowerParameter { .. } | Error::DivisionByZero)) => {
                Check::Excluded(e.to_string())
            }
            Err(e) => Check::Fails(format!("error: {e}")),
        };
        vec![(label, c)]
    })
}

/// The cdf summation identity in `Q(q)` for every `x`.
pub fn cdf_sum(nmax: u32) -> SuiteOutcome {
    let q = formal_q();
    run_cases("cdf-sum", &Params::restricted_set(nmax), |p| {
        (0..=p.m)
            .map(|x| {
                let c = match cdf_summation_identity(p.n, p.big_m(), p.big_n(), p.m, x, &q) {
                    Ok(true) => Check::Holds,
                    Ok(false) => Check::Fails("sides differ".into()),
                    Err(e) => Check::Fails(format!("error: {e}")),
                };
                (format!("{p} x={x}"), c)
            })
            .collect()
    })
}

/// Reduced `p(x; q)` evaluated at `q = 1` against the limit pmf.
pub fn limit(nmax: u32) -> SuiteOutcome {
    let q = formal_q();
    run_cases("limit", &Params::restricted_set(nmax), |p| {
        (0..=p.m)
            .map(|x| {
                let c = (|| {
                    let f = pmf_q(p, x, &q)?;
                    Ok(check_eq(&f.eval(&ExactRational::one())?, &pmf_limit(p, x)?))
                })();
                (format!("{p} x={x}"), from_result(c))
            })
            .collect()
    })
}

/// `p(x; q) >= 0` for each `q` in the list.
pub fn positivity(nmax: u32, qs: &[i64]) -> SuiteOutcome {
    let mut cases = Vec::new();
    for p in Params::restricted_set(nmax) {
        for &q in qs {
            cases.push((p, q));
        }
    }
    run_cases("positivity", &cases, |&(p, qv)| {
        let q = ExactRational::from_integer(qv.into());
        (0..=p.m)
            .map(|x| {
                let c = (|| {
                    let v = pmf_q(&p, x, &q)?;
                    Ok(if v.is_negative() {
                        Check::Fails(format!("p = {v}"))
                    } else {
                        Check::Holds
                    })
                })();
                (format!("{p} q={qv} x={x}"), from_result(c))
            })
            .collect()
    })
}

/// `pmf_limit = pmf_cg_oracle`.
pub fn oracle_cg(nmax: u32) -> SuiteOutcome {
    run_cases("oracle-cg", &Params::restricted_set(nmax), |p| {
        (0..=p.m)
            .map(|x| {
                let c = (|| Ok(check_eq(&pmf_cg_oracle(p, x)?, &pmf_limit(p, x)?)))();
                (format!("{p} x={x}"), from_result(c))
            })
            .collect()
    })
}

/// `pmf_limit = pmf_tensor_oracle`, plus `sum over x <= n/2` equal to 1.
pub fn oracle_tensor(nmax: u32) -> Result<SuiteOutcome> {
    if nmax > crate::oracles::tensor::MAX_N {
        return Err(Error::ResourceLimit(format!(
            "tensor oracle needs nmax <= {}, got {nmax}",
            crate::oracles::tensor::MAX_N
        )));
    }
    Ok(run_cases(
        "oracle-tensor",
        &Params::restricted_set(nmax),
        |p| {
            let all = match pmf_tensor_oracle_all(p) {
                Ok(v) => v,
                Err(e) => return vec![(p.to_string(), Check::Fails(format!("error: {e}")))],
            };
            let mut out: Vec<(String, Check)> = (0..=p.m)
                .map(|x| {
                    let c = (|| Ok(check_eq(&all[x as usize], &pmf_limit(p, x)?)))();
                    (format!("{p} x={x}"), from_result(c))
                })
                .collect();
            let total = all.iter().fold(ExactRational::zero(), |a, b| a + b);
            let beyond_m = all[p.m as usize + 1..].iter().all(Zero::is_zero);
            out.push((
                format!("{p} total"),
                if total.is_one() && beyond_m {
                    Check::Holds
                } else {
                    Check::Fails(format!("total {total}, zero beyond m: {beyond_m}"))
                },
            ));
            out
        },
    ))
}

/// `P^2 = P` and `P^T = P` for every two-row projector with `n <= nmax`.
pub fn oracle_projectors(nmax: u32) -> Result<SuiteOutcome> {
    if nmax > crate::oracles::tensor::MAX_MATRIX_N {
        return Err(Error::ResourceLimit(format!(
            "projector matrices need nmax <= {}, got {nmax}",
            crate::oracles::tensor::MAX_MATRIX_N
        )));
    }
    let cases: Vec<(u32, u32)> = (0..=nmax)
        .flat_map(|n| (0..=n / 2).map(move |x| (n, x)))
        .collect();
    Ok(run_cases("oracle-projectors", &cases, |&(n, x)| {
        let c = match projector_matrix(n, x) {
            Ok(m) if is_orthogonal_projector(&m) => Check::Holds,
            Ok(_) => Check::Fails("not an orthogonal projector".into()),
            Err(e) => Check::Fails(format!("error: {e}")),
        };
        vec![(format!("n={n} x={x}"), c)]
    }))
}

/// Subspace counts against `[n m]_q`, pair counts against
/// `[n-k m-l]_q q^(i^2) [M i]_q [N i]_q`, and relative positions against
/// `q^(i^2) [m i]_q [n-m i]_q`.
pub fn oracle_grassmann(q: u32, nmax: u32) -> Result<SuiteOutcome> {
    if nmax > crate::oracles::grassmann::MAX_N {
        return Err(Error::ResourceLimit(format!(
            "subspace enumeration needs nmax <= {}, got {nmax}",
            crate::oracles::grassmann::MAX_N
        )));
    }
    crate::oracles::FiniteField::new(q)?;
    let qr = ExactRational::from_integer(q.into());
    let qb = |a: u32, b: u32| q_binomial(a as i64, b as i64, &qr);
    let qpow = |e: u32| ExactRational::from_integer(num_bigint::BigInt::from(q).pow(e));
    let as_int = |v: u64| ExactRational::from_integer(v.into());

    type Case = (String, Box<dyn Fn() -> Result<Check> + Sync>);
    let mut cases: Vec<Case> = Vec::new();
    for n in 0..=nmax {
        for m in 0..=n {
            let expected = qb(n, m);
            cases.push((
                format!("q={q} #Gr({m},{n})"),
                Box::new(move || {
                    Ok(check_eq(
                        &as_int(enumerate_subspaces(q, n, m)?.len() as u64),
                        &expected,
                    ))
                }),
            ));
            for i in 0..=m.min(n - m) {
                let expected = qpow(i * i) * qb(m, i) * qb(n - m, i);
                cases.push((
                    format!("q={q} n={n} m={m} K_{i}"),
                    Box::new(move || {
                        Ok(check_eq(
                            &as_int(count_relative_position(q, n, m, i)?),
                            &expected,
                        ))
                    }),
                ));
            }
        }
    }
    for p in Params::relaxed_set(nmax) {
        let (n, m, k, l) = (p.n, p.m, p.k, p.l);
        let (bm, bn) = (p.big_m(), p.big_n());
        let size = qb(n - k, m - l);
        cases.push((
            format!("q={q} #Gr{p}"),
            Box::new(move || {
                Ok(check_eq(
                    &as_int(relative_grassmannian(q, n, m, k, l)?.len() as u64),
                    &size,
                ))
            }),
        ));
        for i in 0..=bm.min(bn) {
            let expected = qb(n - k, m - l) * qpow(i * i) * qb(bm, i) * qb(bn, i);
            cases.push((
                format!("q={q} pairs{p} i={i}"),
                Box::new(move || {
                    Ok(check_eq(
                        &as_int(count_intersection_pairs(q, n, m, k, l, i)?),
                        &expected,
                    ))
                }),
            ));
        }
    }
    let checks = cases
        .par_iter()
        .map(|(label, f)| (label.clone(), from_result(f())))
        .collect();
    Ok(SuiteOutcome::from_checks(
        &format!("oracle-grassmann-q{q}"),
        checks,
    ))
}
