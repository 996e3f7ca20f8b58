//! Command-line front end for the `severi-bn` library.
//!
//! Every command prints one JSON record per line (see [`record::Record`]).
//! Exit codes: 0 on success, 2 on bad input, 3 when `selftest` finds a
//! failing criterion.

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use thiserror::Error;

pub mod commands;
pub mod curve_file;
pub mod record;
pub mod selftest;
pub mod table;

pub use record::{Criterion, Record};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CRITERION: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Bn(#[from] severi_bn::BnError),
    #[error(transparent)]
    Alpha(#[from] severi_bn::AlphaError),
    #[error(transparent)]
    Ec(#[from] severi_bn::EcError),
    #[error(transparent)]
    Lattice(#[from] severi_bn::LatticeError),
    #[error(transparent)]
    Duality(#[from] severi_bn::DualityError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Parser)]
#[command(name = "severi-bn", version, about = "Brill-Noether and Severi computations on abelian surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Brill-Noether numbers, verdicts and gonality strata
    #[command(subcommand)]
    Bn(BnCmd),
    /// Alpha-vectors of degenerate curves
    #[command(subcommand)]
    Alpha(AlphaCmd),
    /// Elliptic curves over prime fields
    #[command(subcommand)]
    Ec(EcCmd),
    /// Intersection numbers on the auxiliary surfaces
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Dual series of cuspidal linear series
    #[command(subcommand)]
    Dual(DualCmd),
    /// Run every invariant suite
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum BnCmd {
    /// Verdict on smooth curves in |L| carrying a g^r_d
    Verdict { p: i64, r: i64, d: i64 },
    /// Expected dimensions and the nodal necessary condition
    Dims { p: i64, delta: i64, r: i64, d: i64 },
    /// Gonality strata of |L|
    Strata { p: i64 },
    /// Verdicts over a grid of inclusive ranges `lo..hi`
    Table {
        #[arg(long, value_parser = parse_range)]
        p_range: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        r_range: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        d_range: RangeInclusive<i64>,
        /// Aligned text table instead of records
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum AlphaCmd {
    /// Minimal-delta vector with entries at most 2k
    Base { n: usize, k: usize },
    /// All vectors with the given n and delta
    Enum {
        n: usize,
        delta: usize,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Base vector, then one node at a time up to delta = n - 1
    Walk { n: usize, k: usize },
}

#[derive(Debug, Subcommand)]
pub enum EcCmd {
    /// Point count and group-law self-test
    Check { q: u64, a: u64, b: u64 },
    /// Build a limit curve from a JSON curve file
    Limit { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// Pair two classes given as `LATTICE:NAME` or `LATTICE:a,b`
    Pair { first: String, second: String },
}

#[derive(Debug, Subcommand)]
pub enum DualCmd {
    /// p - 1 cusps and a simple ramification points, and the dual series
    Scenario { p: i64, r: i64, d: i64 },
}

/// Parses `lo..hi` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|_| format!("'{t}' is not a decimal integer"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (num(lo)?, num(hi)?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

/// Parses `argv`, runs the command and writes to `out`/`err`. Returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    let outcome = match cli.command {
        Command::Bn(BnCmd::Table { p_range, r_range, d_range, pretty }) => {
            match commands::bn_table(p_range, r_range, d_range) {
                Ok(records) if pretty => {
                    let _ = out.write_all(table::render(&records).as_bytes());
                    return EXIT_OK;
                }
                other => other,
            }
        }
        Command::Selftest => {
            let records = selftest::run_all();
            if record::write_records(out, &records).is_err() {
                return EXIT_INPUT;
            }
            return if records.iter().all(Record::passed) { EXIT_OK } else { EXIT_CRITERION };
        }
        command => commands::dispatch(command),
    };
    match outcome {
        Ok(records) => match record::write_records(out, &records) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
