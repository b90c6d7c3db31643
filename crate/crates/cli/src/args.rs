use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use iklp_core::lemmascan::FamilyId;
use iklp_core::{RatPoly, Rational};

#[derive(Debug, Parser)]
#[command(name = "iklp", version, about = "Exact checks for inverse Kazhdan-Lusztig polynomials of paving matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inverse KL polynomial of the uniform matroid U_{m,d}.
    Uniform(UniformArgs),
    /// Run every check on one paving matroid.
    Paving(PavingArgs),
    /// Run the checks on a JSON-lines batch of paving matroids.
    Check(CheckArgs),
    /// Scan random paving profiles, or a grid of lemma families.
    Scan(ScanArgs),
    /// Verify interlacing-lemma instances.
    Lemma(LemmaArgs),
    /// Classify how the roots of two polynomials interleave.
    Interlace(InterlaceArgs),
}

#[derive(Debug, Args)]
pub struct UniformArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub d: u32,
    /// Also print B(Q) at n = deg Q and at n = floor((d-1)/2).
    #[arg(long)]
    pub b_transform: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Also write a CSV summary here.
    #[arg(long)]
    pub summary: Option<PathBuf>,
    /// Record wall-clock time per case (makes output nondeterministic).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Args)]
pub struct PavingArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub d: u32,
    /// Stressed hyperplane counts as "h:count[,h:count]*".
    #[arg(long, default_value = "", value_parser = parse_lambda)]
    pub lambda: LambdaSpec,
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// JSON-lines file, one {"m", "d", "lambda"} object per line.
    pub input: PathBuf,
    /// Only run these checks; the rest are reported as SKIPPED.
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<CheckName>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum CheckName {
    HadamardRealRooted,
    BTransformRealRooted,
    LogConcave,
    HigherOrderTuran,
    Positivity,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 2)]
    pub d_min: u32,
    #[arg(long, default_value_t = 9)]
    pub d_max: u32,
    #[arg(long, default_value_t = 5)]
    pub m_max: u32,
    #[arg(long, default_value_t = 2)]
    pub lambda_max: u64,
    /// Random profiles per (m, d).
    #[arg(long, default_value_t = 20)]
    pub profiles: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Scan these lemma families instead of paving profiles.
    #[arg(long, value_delimiter = ',', value_parser = parse_family)]
    pub families: Vec<FamilyId>,
    #[arg(long, default_value_t = 3)]
    pub n_min: u32,
    #[arg(long, default_value_t = 12)]
    pub n_max: u32,
    /// Largest m or h in the family grid.
    #[arg(long, default_value_t = 8)]
    pub param_max: u32,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LemmaName {
    #[value(name = "L_M1", alias = "m1")]
    M1,
    #[value(name = "L_HH1", alias = "hh1")]
    HH1,
    #[value(name = "L_MD", alias = "md")]
    MD,
    #[value(name = "L_HM", alias = "hm")]
    HM,
}

#[derive(Debug, Args)]
pub struct LemmaArgs {
    #[arg(value_enum, ignore_case = true)]
    pub lemma: LemmaName,
    /// A value or an inclusive range "a..b".
    #[arg(long, value_parser = parse_range)]
    pub m: Option<IntRange>,
    #[arg(long, value_parser = parse_range)]
    pub h: Option<IntRange>,
    #[arg(long, value_parser = parse_range)]
    pub d: IntRange,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct InterlaceArgs {
    /// Coefficients of f, constant term first, e.g. "6,5,1" or "1/2,0,1".
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    pub f: RatPoly,
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    pub g: RatPoly,
}

pub type LambdaSpec = BTreeMap<u32, u64>;

/// "h:count[,h:count]*"; repeated `h` are summed.
pub fn parse_lambda(s: &str) -> Result<LambdaSpec, String> {
    let mut out = LambdaSpec::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (h, c) = item
            .split_once(':')
            .ok_or_else(|| format!("expected h:count, got {item:?}"))?;
        let h: u32 = h.trim().parse().map_err(|e| format!("bad h in {item:?}: {e}"))?;
        let c: u64 = c.trim().parse().map_err(|e| format!("bad count in {item:?}: {e}"))?;
        *out.entry(h).or_default() += c;
    }
    Ok(out)
}

pub fn parse_family(s: &str) -> Result<FamilyId, String> {
    FamilyId::from_str(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntRange(pub RangeInclusive<u32>);

/// "5", "1..8" or "1..=8".
pub fn parse_range(s: &str) -> Result<IntRange, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad integer {t:?}: {e}"));
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let v = num(s)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(IntRange(range))
}

pub fn parse_poly(s: &str) -> Result<RatPoly, String> {
    let coeffs = s
        .split(',')
        .map(|c| {
            let c = c.trim();
            c.parse::<Rational>().map_err(|e| format!("bad coefficient {c:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RatPoly::new(coeffs))
}
