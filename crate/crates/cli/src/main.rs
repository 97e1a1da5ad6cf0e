//! `qracah`: tables, identity checks, oracle comparisons, sampling and
//! positivity scans for the q-Racah distribution.
//!
//! Exit status is 0 when every verdict is PASS or SKIPPED, 1 when some
//! verdict is FAIL, and 2 on an error.

mod commands;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{Grid, SampleArgs, Tuple};
use report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "qracah", version, about = "Exact q-Racah distribution toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Output {
    /// Output format; defaults to csv for tabular commands and json otherwise.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add floating-point columns beside the exact values.
    #[arg(long)]
    approx: bool,
}

#[derive(Args, Debug)]
struct TupleArgs {
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    #[arg(long, allow_negative_numbers = true)]
    k: i64,
    #[arg(long, allow_negative_numbers = true)]
    l: i64,
}

impl TupleArgs {
    fn tuple(&self) -> Tuple {
        Tuple {
            n: self.n,
            m: self.m,
            k: self.k,
            l: self.l,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// pmf and cdf over x = 0..m at a rational q, q = 1, or in Q(q).
    Table {
        #[command(flatten)]
        tuple: TupleArgs,
        /// A positive rational, `1`, or `formal`.
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        q: String,
        #[command(flatten)]
        output: Output,
    },
    /// Run identity suites over every restricted tuple with n <= nmax.
    Verify {
        /// `all`, or a comma-separated list of suite names.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the formula against an independent construction.
    Oracle {
        /// cg, tensor, grassmann or all.
        #[arg(long, default_value = "all")]
        which: String,
        /// Defaults: cg 8, tensor 6, grassmann 4.
        #[arg(long)]
        nmax: Option<u32>,
        /// Field size for the grassmann oracle: 2, 3, 4 or 5.
        #[arg(long)]
        q: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Draw from the distribution and summarize the draws.
    Sample {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        q: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        /// Include the individual draws in the json report.
        #[arg(long)]
        emit_draws: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Minimal pmf entry over a grid of q values. Reports, never asserts.
    Scan {
        #[command(flatten)]
        tuple: TupleArgs,
        #[arg(long, allow_negative_numbers = true, requires_all = ["q_to", "steps"], conflicts_with = "qs")]
        q_from: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        q_to: Option<String>,
        #[arg(long)]
        steps: Option<u32>,
        /// Explicit comma-separated grid, e.g. `2,3,4,5`.
        #[arg(long, value_delimiter = ',')]
        qs: Vec<String>,
        #[command(flatten)]
        output: Output,
    },
}

fn echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn run(cmd: &Command, report: &mut RunReport) -> qracah::Result<()> {
    match cmd {
        Command::Table { tuple, q, output } => {
            commands::table(report, &tuple.tuple(), commands::parse_q(q)?, output.approx)
        }
        Command::Verify { suite, nmax, .. } => commands::verify(report, suite, *nmax),
        Command::Oracle { which, nmax, q, .. } => commands::oracle(report, which, *nmax, *q),
        Command::Sample {
            tuple,
            q,
            seed,
            count,
            emit_draws,
            output,
        } => commands::sample(
            report,
            &tuple.tuple(),
            SampleArgs {
                q: commands::parse_q(q)?,
                seed: *seed,
                count: *count,
                emit_draws: *emit_draws,
                approx: output.approx,
            },
        ),
        Command::Scan {
            tuple,
            q_from,
            q_to,
            steps,
            qs,
            output,
        } => {
            let grid = match (q_from, q_to, steps) {
                (Some(from), Some(to), Some(steps)) => Grid::Range {
                    from: commands::parse_rational(from)?,
                    to: commands::parse_rational(to)?,
                    steps: *steps,
                },
                _ if !qs.is_empty() => Grid::List(
                    qs.iter()
                        .map(|s| commands::parse_rational(s))
                        .collect::<qracah::Result<_>>()?,
                ),
                _ => {
                    return Err(qracah::Error::Parse(
                        "give either --q-from/--q-to/--steps or --qs".into(),
                    ))
                }
            };
            commands::scan(report, &tuple.tuple(), &grid, output.approx)
        }
    }
}

fn output_of(cmd: &Command) -> (&Output, Format) {
    match cmd {
        Command::Table { output, .. }
        | Command::Sample { output, .. }
        | Command::Scan { output, .. } => (output, Format::Csv),
        Command::Verify { output, .. } | Command::Oracle { output, .. } => (output, Format::Json),
    }
}

fn emit(report: &RunReport, output: &Output, format: Format) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match &output.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    match format {
        Format::Json => report.write_json(&mut *sink)?,
        Format::Csv => report.write_csv(&mut *sink)?,
    }
    sink.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = RunReport::new(echo());
    if let Err(e) = run(&cli.command, &mut report) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    report.meta.elapsed_ms = start.elapsed().as_millis() as u64;
    for note in &report.meta.notes {
        eprintln!("note: {note}");
    }

    let (output, default) = output_of(&cli.command);
    if let Err(e) = emit(&report, output, output.format.unwrap_or(default)) {
        eprintln!("error: writing report: {e}");
        return ExitCode::from(2);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
