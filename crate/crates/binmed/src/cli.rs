//! Command-line surface. Results go to stdout as one JSON document (or a
//! CSV body for `table`); diagnostics go to stderr as a single line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use binmed_core::critical::{certify_with_width, isolate_root};
use binmed_core::{median_binomial, Binomial, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::format::{write_table_csv, CertificateJson, EnclosureJson, MedianJson, TableRow, ValueJson};
use crate::montecarlo::mc_median_check;
use crate::verifier::verify_theorem;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "binmed", version, about = "Exact medians of binomial distributions at rational p")]
struct Cli {
    /// Worker threads for `table` and `verify`: a positive count or `auto`.
    #[arg(long, global = true, default_value = "auto", value_parser = parse_threads)]
    threads: Threads,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Count(usize),
}

fn parse_threads(s: &str) -> Result<Threads, String> {
    if s == "auto" {
        return Ok(Threads::Auto);
    }
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected a positive integer or `auto`, got {s:?}")),
        Ok(n) => Ok(Threads::Count(n)),
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: binmed_core::Error| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct Precision {
    /// Decimal digits shown for enclosures; the width is 10^-(digits+5).
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    digits: u32,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Median of B(n, p).
    Median {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        p: Rational,
    },
    /// Exact probability mass b(k, n, p).
    Pmf(PointArgs),
    /// Exact cumulative probability B(k, n, p).
    Cdf(PointArgs),
    /// Certified enclosure of the critical probability p_{n,k}.
    Critical {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        precision: Precision,
    },
    /// Every p_{n,k} for n up to n-max.
    Table {
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        precision: Precision,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Irrationality certificate for p_{n,k}.
    Certify {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        precision: Precision,
    },
    /// Full theorem battery for n up to n-max.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
        denom_max: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        precision: Precision,
    },
    /// Monte Carlo cross-check of the median.
    Mc {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        p: Rational,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct PointArgs {
    #[arg(long)]
    n: u32,
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    p: Rational,
    #[command(flatten)]
    precision: Precision,
}

/// Resolved settings shared by the subcommands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliConfig {
    pub precision_digits: u32,
    pub width: Rational,
    pub output_format: OutputFormat,
    pub seed: u64,
    pub threads: Threads,
}

impl CliConfig {
    pub fn new(precision_digits: u32, output_format: OutputFormat, seed: u64, threads: Threads) -> Self {
        assert!(precision_digits >= 1);
        CliConfig {
            precision_digits,
            width: Rational::pow10_inv(precision_digits + 5),
            output_format,
            seed,
            threads,
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<binmed_core::Error> for Failure {
    fn from(e: binmed_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn index(n: u32, k: i64) -> Result<u32, Failure> {
    if k < 1 || k > n as i64 {
        return Err(binmed_core::Error::IndexOutOfRange { n, k }.into());
    }
    Ok(k as u32)
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            // message lines up to the usage block, folded into one
            let line: Vec<&str> = rendered
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with("For more information"))
                .collect();
            let _ = writeln!(err, "{}", line.join(" "));
            return EXIT_USAGE;
        }
    };
    let pool = match cli.threads {
        Threads::Auto => rayon::ThreadPoolBuilder::new(),
        Threads::Count(n) => rayon::ThreadPoolBuilder::new().num_threads(n),
    }
    .build()
    .expect("thread pool");
    match dispatch(cli, &pool, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_CHECK_FAILED
        }
    }
}

fn dispatch(cli: Cli, pool: &rayon::ThreadPool, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let threads = cli.threads;
    match cli.command {
        Command::Median { n, p } => {
            let m = median_binomial(n, &p)?;
            emit_json(out, &MedianJson::from(&m))?;
        }
        Command::Pmf(a) => point(out, a, |d, k| d.pmf(k))?,
        Command::Cdf(a) => point(out, a, |d, k| d.cdf(k))?,
        Command::Critical { n, k, precision } => {
            let cfg = CliConfig::new(precision.digits, OutputFormat::Json, 0, threads);
            let k = index(n, k)?;
            let enc = isolate_root(n, k, &cfg.width)?;
            emit_json(out, &EnclosureJson::new(&enc, cfg.precision_digits))?;
        }
        Command::Table { n_max, precision, format } => {
            let cfg = CliConfig::new(precision.digits, format, 0, threads);
            let pairs: Vec<(u32, u32)> = (1..=n_max).flat_map(|n| (1..=n).map(move |k| (n, k))).collect();
            let rows = pool.install(|| {
                pairs
                    .par_iter()
                    .map(|&(n, k)| {
                        isolate_root(n, k, &cfg.width).map(|e| TableRow::new(n, k, &e, cfg.precision_digits))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })?;
            match cfg.output_format {
                OutputFormat::Csv => write_table_csv(&rows, &mut *out).map_err(std::io::Error::from)?,
                OutputFormat::Json => emit_json(out, &rows)?,
            }
        }
        Command::Certify { n, k, precision } => {
            let cfg = CliConfig::new(precision.digits, OutputFormat::Json, 0, threads);
            let k = index(n, k)?;
            let cert = certify_with_width(n, k, &cfg.width)?;
            emit_json(out, &CertificateJson::new(&cert, cfg.precision_digits))?;
        }
        Command::Verify { n_max, denom_max, seed, precision } => {
            let cfg = CliConfig::new(precision.digits, OutputFormat::Json, seed, threads);
            let report = pool.install(|| verify_theorem(n_max, denom_max, &cfg.width, cfg.seed));
            emit_json(out, &report)?;
            let failed = report.checks.iter().filter(|c| !c.passed).count();
            writeln!(
                err,
                "verify: {} checks, {failed} failed, {:.2} s",
                report.checks.len(),
                report.wall_time.as_secs_f64()
            )?;
            if !report.passed {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
        Command::Mc { n, p, samples, seed } => {
            let verdict = mc_median_check(n, &p, samples, seed)?;
            emit_json(out, &verdict)?;
            if !verdict.agrees {
                return Ok(EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn point(out: &mut dyn Write, a: PointArgs, f: impl Fn(&Binomial, i64) -> Rational) -> Result<(), Failure> {
    let dist = Binomial::new(a.n, a.p.clone())?;
    let value = f(&dist, a.k);
    emit_json(
        out,
        &ValueJson {
            n: a.n,
            k: a.k,
            p: a.p.to_string(),
            decimal: value.to_decimal(a.precision.digits),
            value: value.to_string(),
        },
    )
}
