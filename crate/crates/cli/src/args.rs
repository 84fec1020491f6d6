use clap::{Args, Parser, Subcommand, ValueEnum};
use pullback_core::{Ceiling, Params};

use crate::ranges::RangeSpec;

#[derive(Debug, Parser)]
#[command(
    name = "pullback",
    version,
    about = "Check and count (k, l)-pullback parking functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Work limit for enumeration and word sums; `unlimited` disables it.
    /// Defaults to $PULLBACK_CEILING, then 100000000.
    #[arg(long, global = true, value_parser = parse_ceiling)]
    pub ceiling: Option<Ceiling>,

    /// Worker threads (defaults to one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Accepted for scripting compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    pub seedless: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Perm,
    Recursive,
    /// Enumeration when it is cheap, the recursion otherwise.
    Auto,
    /// All three, flagging any mismatch.
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Park one preference list and report the outcome with per-car traces.
    Check(CheckArgs),
    /// Count parking functions for one instance.
    Count(CountArgs),
    /// Count over a sweep of instances.
    Table(TableArgs),
    /// List outcome words with their fiber sizes.
    Outcomes(OutcomesArgs),
    /// Cross-check all methods and identities on a grid.
    Verify(VerifyArgs),
}

/// `--k` / `--l` plus the named-rule shorthands.
#[derive(Debug, Args)]
pub struct Allowances {
    /// Backward allowance (default 0).
    #[arg(long)]
    pub k: Option<usize>,

    /// Forward allowance (default n-1).
    #[arg(long)]
    pub l: Option<usize>,

    /// Shorthand for --l n-1.
    #[arg(long, conflicts_with_all = ["l", "classical", "vacillating", "interval"])]
    pub naples: bool,

    /// Shorthand for --k 0 --l n-1.
    #[arg(long, conflicts_with_all = ["k", "l", "vacillating", "interval"])]
    pub classical: bool,

    /// Shorthand for --k 1 --l 1.
    #[arg(long, conflicts_with_all = ["k", "l", "interval"])]
    pub vacillating: bool,

    /// Shorthand for --k 0 --l L.
    #[arg(long, value_name = "L", conflicts_with_all = ["k", "l"])]
    pub interval: Option<usize>,
}

impl Allowances {
    pub fn resolve(&self, m: usize, n: usize) -> Params {
        let full = n.saturating_sub(1);
        let (k, l) = if self.classical {
            (0, full)
        } else if self.vacillating {
            (1, 1)
        } else if let Some(l) = self.interval {
            (0, l)
        } else if self.naples {
            (self.k.unwrap_or(0), full)
        } else {
            (self.k.unwrap_or(0), self.l.unwrap_or(full))
        };
        Params::new(m, n, k, l)
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Preferred spots, comma-separated; the car count is the list length.
    #[arg(long, allow_hyphen_values = true)]
    pub prefs: String,

    /// Number of spots.
    #[arg(long)]
    pub n: usize,

    #[command(flatten)]
    pub allowances: Allowances,

    /// Add a permanently vacant spot 0 that cars must not back into.
    #[arg(long)]
    pub contained: bool,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// Number of cars.
    #[arg(long)]
    pub m: usize,

    /// Number of spots.
    #[arg(long)]
    pub n: usize,

    #[command(flatten)]
    pub allowances: Allowances,

    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Street lengths, e.g. `1..6`.
    #[arg(long)]
    pub n: RangeSpec,

    /// Car counts; may use `n`.
    #[arg(long, default_value = "1..n")]
    pub m: RangeSpec,

    #[arg(long, default_value = "0..n-1")]
    pub k: RangeSpec,

    #[arg(long, default_value = "0..n-1")]
    pub l: RangeSpec,

    #[arg(long, value_enum, default_value_t = Method::Auto)]
    pub method: Method,
}

#[derive(Debug, Args)]
pub struct OutcomesArgs {
    #[arg(long)]
    pub m: usize,

    #[arg(long)]
    pub n: usize,

    #[command(flatten)]
    pub allowances: Allowances,

    /// Also count each fiber by exhaustive enumeration.
    #[arg(long)]
    pub with_oracle: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest street length in the grid.
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,

    /// Deliberately break outcome-word counting to confirm the harness notices.
    #[arg(long)]
    pub inject_fault: bool,
}

fn parse_ceiling(s: &str) -> Result<Ceiling, String> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("unlimited") {
        return Ok(Ceiling::UNLIMITED);
    }
    s.replace('_', "")
        .parse::<u128>()
        .map(Ceiling)
        .map_err(|_| format!("`{s}` is not a nonnegative integer or `unlimited`"))
}
