//! Report assembly and rendering. Every exact value leaves as a string.

use std::io::Write;

use num_traits::ToPrimitive;
use qracah::dist::Params;
use qracah::verify::{Status, SuiteOutcome};
use qracah::{ExactRational, IntPoly, RationalFunction};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, Serialize)]
pub struct ParamsEcho {
    pub n: u32,
    pub m: u32,
    pub k: u32,
    pub l: u32,
    #[serde(rename = "M")]
    pub big_m: u32,
    #[serde(rename = "N")]
    pub big_n: u32,
}

impl From<&Params> for ParamsEcho {
    fn from(p: &Params) -> Self {
        ParamsEcho {
            n: p.n,
            m: p.m,
            k: p.k,
            l: p.l,
            big_m: p.big_m(),
            big_n: p.big_n(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    pub fn check(name: &str, ok: bool, detail: String) -> Self {
        Verdict {
            name: name.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        }
    }
}

impl From<&SuiteOutcome> for Verdict {
    fn from(o: &SuiteOutcome) -> Self {
        Verdict {
            name: o.name.clone(),
            status: o.status,
            detail: o.detail(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Versions {
    pub qracah: &'static str,
    pub cli: &'static str,
    pub rng: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Meta {
    pub versions: Versions,
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Rows for the CSV rendering; JSON goes through `results` instead.
#[derive(Clone, Debug, Default)]
pub struct Rows {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Rows {
    pub fn new(header: &[&str]) -> Self {
        Rows {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: Option<ParamsEcho>,
    pub regime: Option<String>,
    pub q: Option<String>,
    pub results: Vec<Value>,
    pub verdicts: Vec<Verdict>,
    pub meta: Meta,
    #[serde(skip)]
    pub rows: Rows,
}

impl RunReport {
    pub fn new(command: String) -> Self {
        RunReport {
            command,
            params: None,
            regime: None,
            q: None,
            results: Vec::new(),
            verdicts: Vec::new(),
            meta: Meta {
                versions: Versions {
                    qracah: qracah::VERSION,
                    cli: env!("CARGO_PKG_VERSION"),
                    rng: qracah::sampler::RNG_ID,
                },
                seed: None,
                elapsed_ms: 0,
                notes: Vec::new(),
            },
            rows: Rows::default(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }

    pub fn write_json(&self, out: &mut dyn Write) -> std::io::Result<()> {
        serde_json::to_writer_pretty(&mut *out, self)?;
        writeln!(out)
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.rows.header)?;
        for row in &self.rows.rows {
            w.write_record(row)?;
        }
        w.flush()
    }
}

pub fn rational(v: &ExactRational) -> Value {
    Value::String(v.to_string())
}

pub fn approx(v: &ExactRational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

fn poly(p: &IntPoly) -> Value {
    Value::Array(
        p.sparse_terms()
            .map(|(e, c)| json!([e, c.to_string()]))
            .collect(),
    )
}

pub fn formal(v: &RationalFunction) -> Value {
    json!({ "num": poly(v.numerator()), "den": poly(v.denominator()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use qracah::Scalar;

    fn verdict(status: Status) -> Verdict {
        Verdict {
            name: "t".into(),
            status,
            detail: String::new(),
        }
    }

    #[test]
    fn only_fail_breaks_the_run() {
        let mut r = RunReport::new("t".into());
        assert!(r.all_passed());
        r.verdicts = vec![verdict(Status::Pass), verdict(Status::Skipped)];
        assert!(r.all_passed());
        r.verdicts.push(verdict(Status::Fail));
        assert!(!r.all_passed());
    }

    #[test]
    fn polynomials_are_sparse_pairs() {
        let q = RationalFunction::q();
        let num = q.clone() * q.clone() - RationalFunction::one();
        let v = num
            .checked_div(&(q + RationalFunction::one()).powi(2).unwrap())
            .unwrap();
        assert_eq!(
            formal(&v),
            json!({ "num": [[0, "-1"], [1, "1"]], "den": [[0, "1"], [1, "1"]] })
        );
    }
}
