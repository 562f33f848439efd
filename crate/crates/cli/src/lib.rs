//! The `cubesum` command line: argument parsing, dispatch and exit codes.
//!
//! Exit status is 0 on success, 1 when a verification or count check fails
//! (or on an I/O error), and 2 on a usage error or invalid input.

pub mod cache;
mod commands;
pub mod output;
pub mod records;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

pub use output::{Format, Output};

#[derive(Parser, Debug)]
#[command(name = "cubesum", version, about = "Sums of consecutive cubes: search, fibration data, modular coefficients and point counts")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "CUBESUM_FORMAT", default_value = "plain")]
    pub format: Format,
    /// Worker threads for parallel commands (0 = one per core).
    #[arg(long, global = true, env = "CUBESUM_JOBS")]
    pub jobs: Option<usize>,
    /// Coefficient cache file.
    #[arg(long, global = true, env = "CUBESUM_CACHE")]
    pub cache: Option<PathBuf>,
    /// Print progress lines on standard error.
    #[arg(long, global = true, env = "CUBESUM_PROGRESS")]
    pub progress: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solutions of xy(x²+y²-1) = z³ with y ≤ x ≤ bound.
    Search(SearchArgs),
    /// Convert between (m, k, l) and (x, y, z).
    #[command(subcommand)]
    Map(MapCommand),
    /// Members of Pagliani's parametric family.
    Pagliani(PaglianiArgs),
    /// Kodaira fibers of an elliptic fibration.
    Fibers(FibersArgs),
    /// Height pairing and Néron–Severi data of E_t.
    Heights(HeightsArgs),
    /// Section arithmetic on E_t and E'_u.
    #[command(subcommand)]
    Mw(MwCommand),
    /// q-expansion of an eta quotient.
    Eta(EtaArgs),
    /// Prime coefficients a_p three ways, or the coefficient table.
    Ap(ApArgs),
    /// Brute-force point counts against the closed form.
    Count(CountArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Manage the coefficient cache.
    #[command(subcommand)]
    Cache(CacheCommand),
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, env = "CUBESUM_BOUND")]
    pub bound: u64,
    /// Keep the trivial solutions (x, 1, x).
    #[arg(long)]
    pub include_trivial: bool,
}

#[derive(Subcommand, Debug)]
pub enum MapCommand {
    /// (m, k, l) to (x, y, z) = (k, 2m+k-1, 2l).
    ToXyz {
        #[arg(allow_negative_numbers = true)]
        m: BigInt,
        k: BigInt,
        #[arg(allow_negative_numbers = true)]
        l: BigInt,
    },
    /// (x, y, z) back to (m, k, l).
    ToMkl {
        #[arg(allow_negative_numbers = true)]
        x: BigInt,
        #[arg(allow_negative_numbers = true)]
        y: BigInt,
        #[arg(allow_negative_numbers = true)]
        z: BigInt,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct PaglianiArgs {
    /// A single parameter value.
    #[arg(long, allow_negative_numbers = true)]
    pub u: Option<BigInt>,
    /// Every u > 0 whose canonical x is at most this bound.
    #[arg(long)]
    pub up_to: Option<u64>,
    /// The family as polynomials in u and its identity check.
    #[arg(long)]
    pub identity: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Surface {
    #[value(name = "e-t")]
    ET,
    #[value(name = "eps2")]
    Eps2,
}

#[derive(Args, Debug)]
pub struct FibersArgs {
    #[arg(long, default_value = "e-t")]
    pub surface: Surface,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum HeightConventionArg {
    Canonical,
    MwLattice,
}

#[derive(Args, Debug)]
pub struct HeightsArgs {
    #[arg(long, default_value = "mw-lattice")]
    pub convention: HeightConventionArg,
    /// Order of the torsion subgroup used for det NS.
    #[arg(long, default_value_t = 1)]
    pub torsion: u32,
}

#[derive(Subcommand, Debug)]
pub enum MwCommand {
    /// a·σ₁ + b·[ω]σ₁ on E_t, its height and (x, y, z) image.
    Combo {
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        b: i64,
    },
    /// σ₁' ± τ on E'_u and the (x, y, z) images.
    Translate,
}

#[derive(Args, Debug)]
pub struct EtaArgs {
    /// Precision: coefficients through q^n.
    #[arg(long)]
    pub n: usize,
    /// Factors `d:e` separated by commas; defaults to the level-48 form.
    #[arg(long, allow_hyphen_values = true)]
    pub spec: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct ApArgs {
    #[arg(long)]
    pub p: Option<u64>,
    /// All primes 5 ≤ p ≤ N.
    #[arg(long)]
    pub up_to: Option<u64>,
    /// Every a_n with n ≤ N, from the cache.
    #[arg(long)]
    pub coefficients: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    FrobeniusPower,
    ModularCoefficient,
    Both,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("prime").required(true).args(["p", "up_to"])))]
pub struct CountArgs {
    #[arg(long)]
    pub p: Option<u64>,
    /// Every prime 5 ≤ p ≤ N.
    #[arg(long)]
    pub up_to: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long, default_value = "both")]
    pub convention: ConventionArg,
    /// Largest field size for brute force.
    #[arg(long, env = "CUBESUM_BUDGET", default_value_t = cubesum_core::pointcount::DEFAULT_BUDGET)]
    pub budget: u64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Every check (the default).
    #[arg(long)]
    pub all: bool,
    /// Only the named checks.
    #[arg(long = "check", value_parser = clap::builder::PossibleValuesParser::new(verify::check_names()))]
    pub checks: Vec<String>,
    /// Include the multi-hour census to 10⁶.
    #[arg(long)]
    pub extended: bool,
}

#[derive(Subcommand, Debug)]
pub enum CacheCommand {
    /// Regenerate through a_max.
    Build {
        #[arg(long)]
        max: usize,
    },
    Show,
    Clear,
    Path,
}

/// A failure that should exit with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// Whether a command's checks held.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    Success,
    CheckFailed,
}

/// Parses `args` (including the program name), runs the command and writes
/// its output; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    match pool.install(|| commands::dispatch(&cli)) {
        Ok((output, outcome)) => {
            match output.write(cli.format, out) {
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return 1;
                }
                Ok(()) => {}
            }
            match outcome {
                Outcome::Success => 0,
                Outcome::CheckFailed => 1,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            if e.is::<UsageError>() || e.is::<cubesum_core::Error>() {
                2
            } else {
                1
            }
        }
    }
}
