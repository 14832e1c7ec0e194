//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification or table comparison
//! fails, 2 for usage errors (including malformed permutation literals), 3
//! for domain errors such as overlapping operands, 4 for configuration and
//! resource-guard errors, 5 for I/O errors.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::perm::{CyclicPerm, LinearPerm};
use crate::qpoly::QPoly;
use crate::report::render;
use crate::shuffle::{cyclic_shuffles, linear_shuffles};
use crate::sweep::{
    parse_theorems, run_sweep, OutputFormat, Sample, SweepConfig, DEFAULT_SAMPLE_TOTAL,
    DEFAULT_SWEEP_ORACLE_BOUND,
};
use crate::theorems::{
    cyclic_shuffle_maj_gf, cyclic_stanley_rhs, shuffle_maj_gf, stanley_rhs, CyclicShufflePair,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_CONFIG: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "cyclic-shuffle", version, about = "Permutation statistics and shuffle identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print descent statistics of a permutation, e.g. `4,1,3,2`.
    Stats {
        perm: String,
        /// Treat the input as a cyclic class and report its representative.
        #[arg(long)]
        cyclic: bool,
    },
    /// List the shuffles of two disjoint permutations.
    Shuffles {
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        #[arg(long)]
        cyclic: bool,
    },
    /// Compare brute-force and closed-form generating functions per descent number.
    Table {
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        pi: String,
        #[arg(long)]
        cyclic: bool,
    },
    /// Run a verification sweep and emit a report.
    Verify {
        /// Comma-separated subset of stanley,cyclic,agrr,bijection,counts, or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        #[arg(long, default_value_t = crate::sweep::DEFAULT_MAX_TOTAL)]
        max_total: usize,
        /// Largest m+n for the brute-force oracle and bijection checks
        /// [default: min(7, max-total)].
        #[arg(long)]
        oracle_bound: Option<usize>,
        /// Number of random pairs to check above max-total.
        #[arg(long, requires = "seed")]
        sample: Option<usize>,
        #[arg(long, requires = "sample")]
        seed: Option<u64>,
        /// Size m+n of sampled pairs [default: max(10, max-total + 1)].
        #[arg(long, requires = "sample")]
        sample_total: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// An error carrying its exit status.
#[derive(Debug)]
pub struct CliError {
    pub status: i32,
    pub message: String,
}

impl CliError {
    fn new(status: i32, message: impl Display) -> Self {
        Self {
            status,
            message: message.to_string(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::MalformedLiteral { .. } | Error::DuplicateLetter(_) | Error::NonPositiveLetter => {
                EXIT_USAGE
            }
            Error::InvalidConfig(_) | Error::ResourceGuard { .. } => EXIT_CONFIG,
            _ => EXIT_DOMAIN,
        };
        Self::new(status, e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::new(EXIT_IO, e)
    }
}

fn parse_linear(flag: &str, s: &str) -> Result<LinearPerm, CliError> {
    s.parse()
        .map_err(|e: Error| CliError { message: format!("{flag}: {e}"), ..CliError::from(e) })
}

fn parse_cyclic(flag: &str, s: &str) -> Result<CyclicPerm, CliError> {
    s.parse()
        .map_err(|e: Error| CliError { message: format!("{flag}: {e}"), ..CliError::from(e) })
}

fn braces<T: Display>(items: &BTreeSet<T>) -> String {
    let inner: Vec<String> = items.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn stats(out: &mut dyn Write, perm: &str, cyclic: bool) -> Result<i32, CliError> {
    if cyclic {
        let class = parse_cyclic("perm", perm)?;
        let s = class.stats();
        writeln!(out, "class={class}")?;
        writeln!(out, "rep={}", class.rep())?;
        writeln!(out, "des_set={}", braces(&s.des_set))?;
        writeln!(out, "cmaj={}", s.maj)?;
        writeln!(out, "cdes={}", s.cdes)?;
        writeln!(out, "cbd={}", braces(&s.cbd))?;
    } else {
        let p = parse_linear("perm", perm)?;
        let s = p.stats()?;
        writeln!(out, "perm={p}")?;
        writeln!(out, "des_set={}", braces(&s.des_set))?;
        writeln!(out, "des={}", s.des)?;
        writeln!(out, "maj={}", s.maj)?;
        writeln!(out, "cdes_set={}", braces(&s.cdes_set))?;
        writeln!(out, "cdes={}", s.cdes)?;
        writeln!(out, "cbd={}", braces(&s.cbd))?;
    }
    Ok(EXIT_OK)
}

fn shuffles(out: &mut dyn Write, sigma: &str, pi: &str, cyclic: bool) -> Result<i32, CliError> {
    if cyclic {
        let (a, b) = (parse_cyclic("--sigma", sigma)?, parse_cyclic("--pi", pi)?);
        for alpha in &cyclic_shuffles(&a, &b)? {
            writeln!(out, "{alpha}\tcdes={}\tcmaj={}", alpha.cdes(), alpha.cmaj())?;
        }
    } else {
        let (a, b) = (parse_linear("--sigma", sigma)?, parse_linear("--pi", pi)?);
        for alpha in &linear_shuffles(&a, &b)? {
            writeln!(out, "{alpha}\tdes={}\tmaj={}", alpha.des(), alpha.maj())?;
        }
    }
    Ok(EXIT_OK)
}

fn table(out: &mut dyn Write, sigma: &str, pi: &str, cyclic: bool) -> Result<i32, CliError> {
    let rows: Vec<(i64, QPoly, QPoly)> = if cyclic {
        let (a, b) = (parse_cyclic("--sigma", sigma)?, parse_cyclic("--pi", pi)?);
        let pair = CyclicShufflePair::normalized(a, b)?;
        writeln!(out, "# pair {pair}")?;
        (0..pair.total() as i64)
            .map(|k| {
                let lhs = cyclic_shuffle_maj_gf(pair.csigma(), pair.cpi(), k)?;
                Ok((k, lhs, cyclic_stanley_rhs(&pair, k)))
            })
            .collect::<Result<_, Error>>()?
    } else {
        let (a, b) = (parse_linear("--sigma", sigma)?, parse_linear("--pi", pi)?);
        writeln!(out, "# pair {a} | {b}")?;
        (0..(a.len() + b.len()) as i64)
            .map(|k| Ok((k, shuffle_maj_gf(&a, &b, k)?, stanley_rhs(&a, &b, k)?)))
            .collect::<Result<_, Error>>()?
    };
    writeln!(out, "k\tlhs\trhs\tmatch")?;
    let mut all_match = true;
    for (k, lhs, rhs) in rows {
        if lhs.is_zero() && rhs.is_zero() {
            continue;
        }
        let ok = lhs == rhs;
        all_match &= ok;
        writeln!(out, "{k}\t{lhs}\t{rhs}\t{}", if ok { "yes" } else { "no" })?;
    }
    Ok(if all_match { EXIT_OK } else { EXIT_FAILED })
}

#[allow(clippy::too_many_arguments)]
fn verify(
    out: &mut dyn Write,
    theorems: &str,
    max_total: usize,
    oracle_bound: Option<usize>,
    sample: Option<usize>,
    seed: Option<u64>,
    sample_total: Option<usize>,
    format: OutputFormat,
    output: Option<PathBuf>,
) -> Result<i32, CliError> {
    let sample = match (sample, seed) {
        (Some(count), Some(seed)) => Some(Sample {
            count,
            seed,
            total: sample_total.unwrap_or(DEFAULT_SAMPLE_TOTAL.max(max_total + 1)),
        }),
        _ => None,
    };
    let config = SweepConfig {
        max_total,
        oracle_bound: oracle_bound.unwrap_or(DEFAULT_SWEEP_ORACLE_BOUND.min(max_total)),
        theorems: parse_theorems(theorems)?,
        sample,
        output_format: format,
    };
    let report = run_sweep(&config)?;
    let text = render(&report, format);
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(report.exit_status())
}

/// Runs a parsed command, writing normal output to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Stats { perm, cyclic } => stats(out, &perm, cyclic),
        Command::Shuffles { sigma, pi, cyclic } => shuffles(out, &sigma, &pi, cyclic),
        Command::Table { sigma, pi, cyclic } => table(out, &sigma, &pi, cyclic),
        Command::Verify {
            theorems,
            max_total,
            oracle_bound,
            sample,
            seed,
            sample_total,
            format,
            output,
        } => verify(
            out,
            &theorems,
            max_total,
            oracle_bound,
            sample,
            seed,
            sample_total,
            format,
            output,
        ),
    }
}
