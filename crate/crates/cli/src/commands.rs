use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};
use qracah::dist::{normalize_params, positivity_scan, table_at, table_formal, Params, Regime};
use qracah::sampler::{build_sampler, empirical_summary};
use qracah::verify::{self, Suite};
use qracah::{Error, ExactRational, Result};
use serde_json::json;

use crate::report::{approx, formal, rational, ParamsEcho, Rows, RunReport, Verdict};

#[derive(Clone, Debug, PartialEq)]
pub enum QArg {
    Formal,
    Rational(ExactRational),
}

/// Accepts `formal`, integers, `p/q` and finite decimals such as `0.25`.
pub fn parse_q(s: &str) -> Result<QArg> {
    if s.eq_ignore_ascii_case("formal") {
        return Ok(QArg::Formal);
    }
    parse_rational(s).map(QArg::Rational)
}

pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        return Ok(ExactRational::new(digits, scale));
    }
    s.parse().map_err(|_| bad())
}

fn concrete(q: QArg, what: &str) -> Result<ExactRational> {
    match q {
        QArg::Rational(v) => Ok(v),
        QArg::Formal => Err(Error::InvalidQ(format!("{what} needs a concrete q"))),
    }
}

/// Validates against the relaxed set and mirrors into the restricted one,
/// leaving an audit note when that happens.
fn params(report: &mut RunReport, n: i64, m: i64, k: i64, l: i64) -> Result<Params> {
    let norm = normalize_params(n, m, k, l)?;
    let p = norm.params;
    if norm.mirrored {
        report.meta.notes.push(format!(
            "input ({n},{m},{k},{l}) has m > n/2; evaluated at the mirrored point {p}, which has the same distribution"
        ));
    }
    report.params = Some(ParamsEcho::from(&p));
    Ok(p)
}

pub struct Tuple {
    pub n: i64,
    pub m: i64,
    pub k: i64,
    pub l: i64,
}

pub fn table(report: &mut RunReport, t: &Tuple, q: QArg, with_approx: bool) -> Result<()> {
    let p = params(report, t.n, t.m, t.k, t.l)?;
    match q {
        QArg::Formal => {
            let table = table_formal(&p)?;
            report.regime = Some(Regime::Formal.as_str().to_string());
            report.q = Some("formal".into());
            report.rows = Rows::new(&["x", "pmf", "cdf"]);
            let mut total = qracah::RationalFunction::zero();
            for (x, (f, c)) in table.pmf.iter().zip(&table.cdf).enumerate() {
                total = total + f.clone();
                report
                    .results
                    .push(json!({ "x": x, "pmf": formal(f), "cdf": formal(c) }));
                report
                    .rows
                    .push(vec![x.to_string(), f.to_string(), c.to_string()]);
            }
            report.verdicts.push(Verdict::check(
                "sum1",
                total.is_one(),
                format!("sum of pmf in Q(q) = {total}"),
            ));
        }
        QArg::Rational(q) => {
            let table = table_at(&p, &q)?;
            report.regime = Some(table.regime().as_str().to_string());
            report.q = Some(q.to_string());
            let mut header = vec!["x", "pmf", "cdf"];
            if with_approx {
                header.extend(["pmf_approx", "cdf_approx"]);
            }
            report.rows = Rows::new(&header);
            for (x, (f, c)) in table.pmf.iter().zip(&table.cdf).enumerate() {
                let mut entry = json!({ "x": x, "pmf": rational(f), "cdf": rational(c) });
                let mut row = vec![x.to_string(), f.to_string(), c.to_string()];
                if with_approx {
                    entry["pmf_approx"] = json!(approx(f));
                    entry["cdf_approx"] = json!(approx(c));
                    row.extend([approx(f).to_string(), approx(c).to_string()]);
                }
                report.results.push(entry);
                report.rows.push(row);
            }
            let total = table.total();
            report.verdicts.push(Verdict::check(
                "sum1",
                total.is_one(),
                format!("sum of pmf = {total}"),
            ));
            if let Some((x, v)) = table.first_negative() {
                report
                    .meta
                    .notes
                    .push(format!("negative mass {v} at x = {x}"));
            }
        }
    }
    Ok(())
}

fn outcome_rows(report: &mut RunReport, outcomes: &[verify::SuiteOutcome]) {
    report.rows = Rows::new(&["name", "status", "checked", "failed", "excluded", "detail"]);
    for o in outcomes {
        report
            .results
            .push(serde_json::to_value(o).expect("suite outcomes serialize"));
        report.verdicts.push(Verdict::from(o));
        report.rows.push(vec![
            o.name.clone(),
            o.status.to_string(),
            o.checked.to_string(),
            o.failed.to_string(),
            o.excluded.to_string(),
            o.detail(),
        ]);
    }
}

pub fn verify(report: &mut RunReport, suite: &str, nmax: u32) -> Result<()> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        suite
            .split(',')
            .map(|s| s.trim().parse())
            .collect::<Result<_>>()?
    };
    let outcomes: Vec<_> = suites.iter().map(|s| s.run(nmax)).collect();
    outcome_rows(report, &outcomes);
    Ok(())
}

pub fn oracle(
    report: &mut RunReport,
    which: &str,
    nmax: Option<u32>,
    q: Option<u32>,
) -> Result<()> {
    let wanted = |name| which == "all" || which == name;
    if !["all", "cg", "tensor", "grassmann"].contains(&which) {
        return Err(Error::Parse(format!(
            "unknown oracle {which:?}; expected cg, tensor, grassmann or all"
        )));
    }
    let mut outcomes = Vec::new();
    if wanted("cg") {
        outcomes.push(verify::oracle_cg(nmax.unwrap_or(8)));
    }
    if wanted("tensor") {
        let n = nmax.unwrap_or(6);
        outcomes.push(verify::oracle_tensor(n)?);
        outcomes.push(verify::oracle_projectors(n.min(5))?);
    }
    if wanted("grassmann") {
        let field = q.unwrap_or(2);
        outcomes.push(verify::oracle_grassmann(field, nmax.unwrap_or(4))?);
        report.q = Some(field.to_string());
        report.regime = Some(Regime::PrimePower.as_str().to_string());
    }
    outcome_rows(report, &outcomes);
    Ok(())
}

pub struct SampleArgs {
    pub q: QArg,
    pub seed: u64,
    pub count: usize,
    pub emit_draws: bool,
    pub approx: bool,
}

pub fn sample(report: &mut RunReport, t: &Tuple, a: SampleArgs) -> Result<()> {
    let p = params(report, t.n, t.m, t.k, t.l)?;
    let q = concrete(a.q, "sampling")?;
    let mut sampler = build_sampler(&p, &q, a.seed)?;
    report.regime = Some(Regime::classify(&q).as_str().to_string());
    report.q = Some(q.to_string());
    report.meta.seed = Some(a.seed);
    let draws = sampler.draw(a.count);
    let s = empirical_summary(&draws, &sampler.pmf)?;

    let mut header = vec!["x", "pmf", "count", "frequency"];
    if a.approx {
        header.extend(["pmf_approx", "frequency_approx"]);
    }
    report.rows = Rows::new(&header);
    let total = ExactRational::from_integer(BigInt::from(s.count));
    for (x, (f, &c)) in sampler.pmf.iter().zip(&s.frequencies).enumerate() {
        let freq = ExactRational::from_integer(BigInt::from(c)) / &total;
        let mut row = vec![
            x.to_string(),
            f.to_string(),
            c.to_string(),
            freq.to_string(),
        ];
        if a.approx {
            row.extend([approx(f).to_string(), approx(&freq).to_string()]);
        }
        report.rows.push(row);
    }

    let mut summary = json!({
        "count": s.count,
        "frequencies": s.frequencies,
        "pmf": sampler.pmf.iter().map(rational).collect::<Vec<_>>(),
        "mean": rational(&s.mean),
        "variance": rational(&s.variance),
        "exact_mean": rational(&s.exact_mean),
        "exact_variance": rational(&s.exact_variance),
        "max_abs_diff": rational(&s.max_abs_diff),
        "chi_square": rational(&s.chi_square),
        "degrees_of_freedom": s.degrees_of_freedom,
        "off_support": s.off_support,
        "stream": sampler.stream,
    });
    if a.approx {
        summary["chi_square_approx"] = json!(s.chi_square_f64());
        summary["mean_z_score"] = json!(s.mean_z_score());
    }
    if a.emit_draws {
        summary["draws"] = json!(draws);
    }
    report.results.push(summary);
    report.verdicts.push(Verdict::check(
        "support",
        s.off_support == 0,
        format!(
            "{} of {} draws outside the support of the pmf",
            s.off_support, s.count
        ),
    ));
    Ok(())
}

pub enum Grid {
    Range {
        from: ExactRational,
        to: ExactRational,
        steps: u32,
    },
    List(Vec<ExactRational>),
}

impl Grid {
    pub fn points(&self) -> Result<Vec<ExactRational>> {
        match self {
            Grid::List(v) => Ok(v.clone()),
            Grid::Range { from, to, steps } => {
                if *steps == 0 {
                    return Err(Error::Parse("--steps must be at least 1".into()));
                }
                let width = (to - from) / ExactRational::from_integer(BigInt::from(*steps));
                Ok((0..=*steps)
                    .map(|i| from + &width * ExactRational::from_integer(BigInt::from(i)))
                    .collect())
            }
        }
    }
}

pub fn scan(report: &mut RunReport, t: &Tuple, grid: &Grid, with_approx: bool) -> Result<()> {
    let p = params(report, t.n, t.m, t.k, t.l)?;
    let points = positivity_scan(&p, &grid.points()?)?;
    let mut header = vec!["q", "regime", "min_pmf", "argmin"];
    if with_approx {
        header.extend(["q_approx", "min_pmf_approx"]);
    }
    report.rows = Rows::new(&header);
    for pt in &points {
        let mut entry = json!({
            "q": rational(&pt.q),
            "regime": pt.regime.as_str(),
            "min_pmf": rational(&pt.min),
            "argmin": pt.argmin,
        });
        let mut row = vec![
            pt.q.to_string(),
            pt.regime.as_str().to_string(),
            pt.min.to_string(),
            pt.argmin.to_string(),
        ];
        if with_approx {
            entry["q_approx"] = json!(approx(&pt.q));
            entry["min_pmf_approx"] = json!(pt.min_f64());
            row.extend([approx(&pt.q).to_string(), pt.min_f64().to_string()]);
        }
        report.results.push(entry);
        report.rows.push(row);
    }
    let negative = points
        .iter()
        .filter(|pt| pt.min < ExactRational::zero())
        .count();
    report.meta.notes.push(format!(
        "{negative} of {} grid points have a negative pmf entry",
        points.len()
    ));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n.into(), d.into())
    }

    #[test]
    fn q_forms() {
        assert_eq!(parse_q("formal").unwrap(), QArg::Formal);
        assert_eq!(parse_q("3/6").unwrap(), QArg::Rational(r(1, 2)));
        assert_eq!(parse_q("1").unwrap(), QArg::Rational(r(1, 1)));
        assert_eq!(parse_q("0.25").unwrap(), QArg::Rational(r(1, 4)));
        assert_eq!(parse_q("-1.5").unwrap(), QArg::Rational(r(-3, 2)));
        assert!(parse_q("1.").is_err());
        assert!(parse_q("abc").is_err());
    }

    #[test]
    fn grid_endpoints_are_exact() {
        let g = Grid::Range {
            from: r(1, 2),
            to: r(3, 2),
            steps: 4,
        };
        let pts = g.points().unwrap();
        assert_eq!(pts.len(), 5);
        assert_eq!(pts[0], r(1, 2));
        assert_eq!(pts[2], r(1, 1));
        assert_eq!(pts[4], r(3, 2));
        assert!(Grid::Range {
            from: r(1, 1),
            to: r(2, 1),
            steps: 0
        }
        .points()
        .is_err());
    }
}
