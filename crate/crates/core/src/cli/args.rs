use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "radixroot",
    version,
    about = "Base-k expansions, digital roots and unit-group orbits in exact arithmetic"
)]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report whether a value terminates in a base, its minimum exponent and period.
    Classify {
        /// `a`, `a/b` or bracket notation such as `[4.25]_6`
        literal: String,
        #[arg(long)]
        base: Option<u64>,
    },
    /// Print the canonical expansion of a value.
    Repr {
        literal: String,
        #[arg(long)]
        base: Option<u64>,
        /// Use the expansion with infinitely many nonzero digits.
        #[arg(long)]
        infinite: bool,
    },
    /// Re-express a value in another base.
    Convert {
        literal: String,
        #[arg(long)]
        to: u64,
        #[arg(long)]
        infinite: bool,
    },
    /// Digital root, additive persistence and trajectory of a terminating value.
    Digroot {
        literal: String,
        #[arg(long)]
        base: Option<u64>,
    },
    /// List the orbits of Z_n under multiplication by its units.
    Orbits {
        #[arg(long)]
        modulus: u64,
    },
    /// Check one instance of a digital-root statement.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Check a statement exhaustively over bounded ranges.
    #[command(subcommand)]
    Fuzz(FuzzCommand),
    /// Recover the digit hidden by `?` in a multiple of k - 1.
    Magic {
        pattern: String,
        #[arg(long, default_value_t = 10)]
        base: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Orbit invariance of digital roots under division by a proper divisor.
    Main1 {
        #[arg(long)]
        q: String,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        base: u64,
        /// Largest power of r to divide by.
        #[arg(long, default_value_t = 5)]
        terms: u64,
    },
    /// Repetend digital root of n/s.
    Main2 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        base: u64,
    },
    /// A digital root of k - 1 survives division by a proper divisor.
    Cor1 {
        #[arg(long)]
        q: String,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        base: u64,
    },
    /// Digit sum and digital root agree modulo k - 1.
    Lemma31 {
        #[arg(long)]
        q: String,
        #[arg(long)]
        base: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FuzzCommand {
    Main1 {
        #[arg(long, default_value = "2..16")]
        bases: BaseRange,
        #[arg(long, default_value_t = 120)]
        bound: u64,
        #[arg(long, default_value_t = 5)]
        terms: u64,
        #[command(flatten)]
        workers: WorkerArgs,
    },
    Main2 {
        #[arg(long, default_value = "2..16")]
        bases: BaseRange,
        #[arg(long, default_value_t = 100)]
        n_bound: u64,
        #[arg(long, default_value_t = 100)]
        s_bound: u64,
        #[command(flatten)]
        workers: WorkerArgs,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct WorkerArgs {
    /// Worker threads; defaults to RADIXROOT_WORKERS or the available cores.
    #[arg(long)]
    pub workers: Option<usize>,
}

/// Inclusive base range written `lo..hi` or a single base `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseRange {
    pub lo: u64,
    pub hi: u64,
}

impl BaseRange {
    pub fn range(self) -> RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl FromStr for BaseRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
            None => (s, s),
        };
        let lo: u64 = lo.parse().map_err(|_| format!("bad range start in {s:?}"))?;
        let hi: u64 = hi.parse().map_err(|_| format!("bad range end in {s:?}"))?;
        if lo < 2 {
            return Err(format!("bases start at 2, got {lo}"));
        }
        if lo > hi {
            return Err(format!("range {s:?} is inverted"));
        }
        Ok(Self { lo, hi })
    }
}

impl fmt::Display for BaseRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}
