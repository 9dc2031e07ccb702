//! Argument parsing and command dispatch for the `dasasm` binary.

use std::fmt;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use dasasm::asm::SymmetryClass;
use dasasm::sample::{DEFAULT_SEED, DEFAULT_TRIALS};

mod count;
mod eval;
mod table;
mod verify;

pub use eval::Expr;
pub use verify::Suite;

/// Exit status for success, failed identity checks and bad input or bounds.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "dasasm", version, about = "Exact enumeration and partition functions for odd-order DASASMs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for sampled points.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Sampled points per case.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,

    /// Replaces the built-in bound on n for the command.
    #[arg(long, global = true, env = "DASASM_MAX_N")]
    pub max_n: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count matrices of a symmetry class. For `dasasm`, n is the half-order
    /// (matrices of size 2n+1); for every other class it is the size.
    #[command(visible_alias = "counts")]
    Count {
        #[arg(long, default_value = "dasasm", value_parser = parse_class)]
        class: SymmetryClass,
        #[arg(long, default_value = "0..5")]
        n: NRange,
        /// Shorthand for `--n 0..K`.
        #[arg(long, value_name = "K", conflicts_with = "n")]
        n_max: Option<usize>,
        /// Separate counts by central entry (odd orders only).
        #[arg(long)]
        split_center: bool,
    },
    /// Run a verification suite and report every check.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<NRange>,
    },
    /// Evaluate a partition function or one of its closed forms.
    Eval {
        #[arg(value_enum)]
        expr: Expr,
        #[arg(long)]
        n: usize,
        /// Spectral parameters u_1..u_{n+1}, comma-separated; one value is
        /// repeated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        u: Vec<String>,
        /// `symbolic`, a rational `p/q`, or `zeta N k` for e^{2πik/N}. Write
        /// a negative fraction as `--q=-3/2`.
        #[arg(long, num_args = 1..=3, allow_negative_numbers = true)]
        q: Vec<String>,
        /// Return the cleared polynomial in q and u.
        #[arg(long)]
        symbolic: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn parse_class(s: &str) -> Result<SymmetryClass, String> {
    s.parse().map_err(|e: dasasm::Error| e.to_string())
}

/// `k`, or the inclusive range `a..b` (also `a..=b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn new(lo: usize, hi: usize) -> Self {
        NRange { lo, hi }
    }

    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for NRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad n value {t:?}"));
        let r = match s.split_once("..") {
            None => NRange::new(num(s)?, num(s)?),
            Some((a, b)) => NRange::new(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        };
        if r.lo > r.hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(r)
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// Output and exit status of a command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// An error that ends the run with [`EXIT_CONFIG`].
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<dasasm::Error> for CliError {
    fn from(e: dasasm::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError(e.to_string())
    }
}

pub(crate) fn bound_check(what: &str, n: usize, max: usize) -> Result<(), CliError> {
    if n > max {
        return Err(CliError(format!("{what}: n = {n} exceeds the bound {max} (raise with --max-n or DASASM_MAX_N)")));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Count { class, n, n_max, split_center } => {
            let n = n_max.map_or(*n, |k| NRange::new(0, k));
            count::run(cli, *class, n, *split_center)
        }
        Command::Verify { suite, n } => verify::run(cli, *suite, *n),
        Command::Eval { expr, n, u, q, symbolic } => eval::run(cli, *expr, *n, u, q, *symbolic),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("3".parse::<NRange>().unwrap(), NRange::new(3, 3));
        assert_eq!("0..7".parse::<NRange>().unwrap(), NRange::new(0, 7));
        assert_eq!("1..=4".parse::<NRange>().unwrap(), NRange::new(1, 4));
        assert!("4..1".parse::<NRange>().is_err());
        assert!("x".parse::<NRange>().is_err());
    }
}
