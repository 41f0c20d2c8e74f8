use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use slice_sieve::knotpres::Sign;
use slice_sieve::obstruct::Mode;
use slice_sieve::polymat::DetStrategy;

#[derive(Parser, Debug)]
#[command(
    name = "slice-sieve",
    version,
    about = "Exact twisted Alexander polynomial slice obstructions for P(2n, m, −(2n±1), −m)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Determinant algorithm: eval-interp, bareiss or cofactor.
    #[arg(long, global = true, value_parser = DetStrategy::from_str, default_value = "eval-interp")]
    pub det_strategy: DetStrategy,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the obstruction on one knot, or on each `--spec` in order.
    Analyze(AnalyzeArgs),
    /// Regenerate the `(f_b, g_n)` table for a prime.
    Tables(TablesArgs),
    /// Classical Alexander polynomial by Seifert matrix and by Fox calculus.
    Alexander(KnotArgs),
    /// `H₁` of the `p`-fold branched cover with `ℤ₂` coefficients.
    Homology(SpecArgs),
    /// Identity suites, pipeline cross-checks and table verification.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug, Clone)]
pub struct KnotArgs {
    #[arg(long)]
    pub n: i64,
    #[arg(long)]
    pub m: i64,
    #[arg(long, value_parser = Sign::from_str, default_value = "plus")]
    pub sign: Sign,
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    #[command(flatten)]
    pub knot: KnotArgs,
    /// Defaults to the smallest prime divisor of m with 2 primitive.
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[arg(long, required_unless_present = "spec")]
    pub n: Option<i64>,
    #[arg(long, required_unless_present = "spec")]
    pub m: Option<i64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long, value_parser = Sign::from_str, default_value = "plus")]
    pub sign: Sign,
    /// Batch entries `n,m[,p][,sign]`; `p` may be `_` for the default.
    #[arg(long, conflicts_with_all = ["n", "m", "p"])]
    pub spec: Vec<String>,
    #[arg(long, value_parser = Mode::from_str, default_value = "both")]
    pub mode: Mode,
}

#[derive(Args, Debug)]
pub struct TablesArgs {
    /// Both recorded primes when omitted.
    #[arg(long)]
    pub p: Option<u64>,
    /// Compare against the recorded rows and fail on any difference.
    #[arg(long)]
    pub verify: bool,
    /// Recorded rows to compare against instead of the built-in file.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    /// Range of n for primes without recorded rows.
    #[arg(long)]
    pub from: Option<i64>,
    #[arg(long)]
    pub to: Option<i64>,
}

#[derive(Args, Debug)]
pub struct SelftestArgs {
    /// Skip the p = 11 end-to-end determinant.
    #[arg(long)]
    pub quick: bool,
    #[arg(long)]
    pub golden: Option<PathBuf>,
}

/// `n,m[,p][,sign]`
pub fn parse_batch_entry(s: &str) -> Result<(i64, i64, Option<u64>, Sign), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = |what: &str| format!("bad --spec {s:?}: {what}");
    if !(2..=4).contains(&parts.len()) {
        return Err(bad("expected n,m[,p][,sign]"));
    }
    let n = parts[0].parse().map_err(|_| bad("n is not an integer"))?;
    let m = parts[1].parse().map_err(|_| bad("m is not an integer"))?;
    let mut p = None;
    let mut sign = Sign::Plus;
    for part in &parts[2..] {
        if let Ok(q) = part.parse::<u64>() {
            p = Some(q);
        } else if *part != "_" {
            sign = part.parse().map_err(|e: String| bad(&e))?;
        }
    }
    Ok((n, m, p, sign))
}
