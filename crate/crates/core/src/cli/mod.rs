//! The `mirror-hg` command line: `verify` runs check suites, `compute` exports
//! exact objects. [`run`] is the whole program minus process exit, so it can
//! be driven from tests.

mod compute;
mod output;
mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use compute::{compute_object, Object, Record};
pub use suites::{run_suite, Suite};

/// Environment variable that replaces every suite's default x-order.
pub const DEFAULT_ORDER_ENV: &str = "MIRROR_HG_DEFAULT_ORDER";

#[derive(Parser, Debug)]
#[command(name = "mirror-hg", version, about = "Exact checks on a mirror-symmetry hypergeometric series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one or all verification suites.
    Verify(VerifyArgs),
    /// Export an exact object.
    Compute(ComputeArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct CommonArgs {
    /// A single n.
    #[arg(long)]
    pub n: Option<u32>,
    /// An inclusive range of n, written A..B.
    #[arg(long, value_parser = parse_range)]
    pub n_range: Option<(u32, u32)>,
    /// Truncation order in x.
    #[arg(long)]
    pub x_order: Option<usize>,
    /// Largest s for Φ_s.
    #[arg(long)]
    pub smax: Option<usize>,
    /// Largest k for P_k and 𝕃_k.
    #[arg(long)]
    pub kmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for independent (suite, n) pairs.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Negative control: perturb one input coefficient at this index.
    #[arg(long)]
    pub perturb: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct ComputeArgs {
    #[arg(value_enum)]
    pub object: Object,
    /// Index for single-index objects such as `ek`.
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got {s}"))?;
    let a: u32 = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

impl CommonArgs {
    /// The requested n values, if any were given.
    pub fn ns(&self) -> Option<Vec<u32>> {
        match (self.n, self.n_range) {
            (Some(n), _) => Some(vec![n]),
            (None, Some((a, b))) => Some((a..=b).collect()),
            (None, None) => None,
        }
    }

    /// `--x-order`, else the environment default, else `None`.
    pub fn order_override(&self) -> Result<Option<usize>, String> {
        if self.x_order.is_some() {
            return Ok(self.x_order);
        }
        match std::env::var(DEFAULT_ORDER_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| format!("{DEFAULT_ORDER_ENV} must be a non-negative integer, got {v}")),
            Err(_) => Ok(None),
        }
    }
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Parses `args` and runs the command, writing results to `out` (or the
/// `--out` file) and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return EXIT_USAGE;
            }
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let (result, common) = match &cli.command {
        Command::Verify(v) => (suites::cmd_verify(v), &v.common),
        Command::Compute(c) => (compute::cmd_compute(c), &c.common),
    };
    match result {
        Ok((text, code)) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, &text).map_err(|e| e.to_string()),
                None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
