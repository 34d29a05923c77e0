use clap::{Args, Parser, Subcommand, ValueEnum};
use superbbw::{Characteristic, Perm, SuperRootData, Superdim, Weight};

use crate::Failure;

#[derive(Parser)]
#[command(
    name = "superbbw",
    version,
    about = "Line bundle cohomology on GL(m|n)/B"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Positive and simple roots, ρ-vectors, standardness and Kempf bounds.
    Roots(SystemArgs),
    /// The character of the Euler characteristic χ(B, λ).
    Chi(WeightArgs),
    /// Cohomology verdicts for one weight.
    Verdict(VerdictArgs),
    /// Verdicts over a box of weights, one row per (w, p, λ).
    Scan(ScanArgs),
    /// Run the acceptance checks.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Json,
    Csv,
}

#[derive(Args)]
pub struct SystemArgs {
    #[arg(short = 'm')]
    pub m: usize,
    #[arg(short = 'n')]
    pub n: usize,
    /// One-line permutation such as 1,3,2 (identity when omitted).
    #[arg(short = 'w')]
    pub w: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    pub out: OutFormat,
}

#[derive(Args)]
pub struct WeightArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Comma-separated integer coordinates.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub parity: u8,
}

#[derive(Args)]
pub struct VerdictArgs {
    #[command(flatten)]
    pub weight: WeightArgs,
    /// Characteristic of the ground field: 0 or a prime.
    #[arg(long = "char", default_value_t = 0)]
    pub char: u64,
}

#[derive(Args)]
pub struct ScanArgs {
    #[arg(short = 'm')]
    pub m: usize,
    #[arg(short = 'n')]
    pub n: usize,
    /// One-line permutation; repeat for several systems (identity when omitted).
    #[arg(short = 'w')]
    pub w: Vec<String>,
    /// Coordinate range LO:HI; give once for every coordinate or once per coordinate.
    #[arg(long = "box", allow_hyphen_values = true, required = true)]
    pub bounds: Vec<String>,
    /// Characteristic; repeat for several.
    #[arg(long = "char")]
    pub chars: Vec<u64>,
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub parity: u8,
    /// Re-run the character identities and consistency checks on every row.
    #[arg(long)]
    pub verify: bool,
    /// Refuse scans with more rows than this.
    #[arg(long, default_value_t = 2_000_000)]
    pub max_rows: u64,
    #[arg(long, value_enum, default_value = "csv")]
    pub out: OutFormat,
}

#[derive(Args)]
pub struct SelftestArgs {
    /// Run a single criterion.
    #[arg(long)]
    pub only: Option<u8>,
}

pub fn system(m: usize, n: usize, w: Option<&str>) -> Result<SuperRootData, Failure> {
    let dim = Superdim::new(m, n)?;
    let perm = match w {
        Some(text) => Perm::parse(text)?,
        None => Perm::identity(m + n),
    };
    if perm.len() != m + n {
        return Err(Failure::usage(format!(
            "permutation {perm} has length {}, expected {}",
            perm.len(),
            m + n
        )));
    }
    Ok(SuperRootData::new(dim, perm)?)
}

impl SystemArgs {
    pub fn system(&self) -> Result<SuperRootData, Failure> {
        system(self.m, self.n, self.w.as_deref())
    }
}

impl WeightArgs {
    pub fn lambda(&self) -> Result<Weight, Failure> {
        let lambda = Weight::parse(&self.lambda)?;
        let expected = self.system.m + self.system.n;
        if lambda.len() != expected {
            return Err(Failure::usage(format!(
                "--lambda has {} coordinates, expected {expected}",
                lambda.len()
            )));
        }
        if !lambda.is_integral() {
            return Err(Failure::usage("--lambda must be integral"));
        }
        Ok(lambda)
    }
}

pub fn characteristic(p: u64) -> Result<Characteristic, Failure> {
    Characteristic::new(p)
        .map_err(|_| Failure::usage(format!("--char {p} is neither 0 nor a prime")))
}
