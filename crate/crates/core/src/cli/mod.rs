//! `dqho` command line: verification report, spectra, plot data,
//! resolution scaling and unitary dilation.

mod beta;
mod commands;
pub mod verify;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coherent::EvolutionConvention;
use crate::error::{Error, Result};
use crate::repmat::{HamiltonianConvention, IndexConvention};
use crate::states::RescaleMode;

pub use beta::parse_complex;

/// Directory used for outputs when `--output` is absent.
pub const OUTPUT_DIR_ENV: &str = "DQHO_OUTPUT_DIR";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dqho", version, about = "Algebraic discrete quantum harmonic oscillator toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the operator algebra and every numerical construction against its oracle.
    Verify(VerifyArgs),
    /// Eigenvalues of the Hamiltonian at one resolution.
    Spectrum(SpectrumArgs),
    /// Energy eigenstate wavefunctions on the position grid.
    Wavefunction(WavefunctionArgs),
    /// Coherent-state frames over a time or displacement sweep.
    Coherent(CoherentArgs),
    /// Move a state file to another resolution.
    Scale(ScaleArgs),
    /// Embed a scaled operator in a unitary of twice the size.
    Dilate(DilateArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value = "canonical")]
    pub hamiltonian_convention: HamiltonianConvention,
    /// Append a negative control built from a deliberately corrupted Hamiltonian.
    #[arg(long)]
    pub self_test_corrupt: bool,
    /// JSON report path.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, required_unless_present = "matrix")]
    pub s: Option<usize>,
    #[arg(long, default_value = "canonical")]
    pub hamiltonian_convention: HamiltonianConvention,
    /// Symmetric tridiagonal matrix file (CSV, or JSON by extension) instead of `H`.
    #[arg(long, conflicts_with = "s")]
    pub matrix: Option<PathBuf>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Energy index or every level.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    One(usize),
    All,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(Level::All);
        }
        s.parse()
            .map(Level::One)
            .map_err(|_| Error::Parse(format!("energy index must be a non-negative integer or `all`, got `{s}`")))
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::One(n) => write!(f, "{n}"),
            Level::All => f.write_str("all"),
        }
    }
}

#[derive(Debug, Args)]
pub struct WavefunctionArgs {
    #[arg(long)]
    pub s: usize,
    #[arg(long, default_value = "all")]
    pub n: Level,
    #[arg(long, default_value = "n1-ascending")]
    pub index_convention: IndexConvention,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sweep {
    /// Fixed `β`, varying `t`.
    Time,
    /// Fixed `arg β` and `t`, varying `|β|`.
    Beta,
}

#[derive(Debug, Args)]
pub struct CoherentArgs {
    #[arg(long)]
    pub s: usize,
    /// Displacement for the time sweep, e.g. `i*pi/8` or `0.1+0.2i`.
    #[arg(long, value_parser = parse_complex_arg)]
    pub beta: Option<num_complex::Complex64>,
    #[arg(long, value_enum, default_value = "time")]
    pub sweep: Sweep,
    /// Start of the time grid; the fixed time of a displacement sweep.
    #[arg(long, default_value = "0", value_parser = parse_real_arg)]
    pub t_min: f64,
    #[arg(long, default_value = "pi/4", value_parser = parse_real_arg)]
    pub t_max: f64,
    #[arg(long, default_value_t = 33)]
    pub t_steps: usize,
    #[arg(long, default_value = "0", value_parser = parse_real_arg)]
    pub beta_min: f64,
    #[arg(long, default_value = "pi/8", value_parser = parse_real_arg)]
    pub beta_max: f64,
    #[arg(long, default_value_t = 33)]
    pub beta_steps: usize,
    /// `arg β` held fixed during a displacement sweep.
    #[arg(long, default_value = "0", value_parser = parse_real_arg)]
    pub beta_arg: f64,
    #[arg(long, default_value = "paper-phase")]
    pub evolution: EvolutionConvention,
    #[arg(long, default_value = "n1-ascending")]
    pub index_convention: IndexConvention,
    /// Frame CSV path.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Summary CSV path.
    #[arg(long)]
    pub summary: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScaleArgs {
    /// JSON state file `{s, basis, amplitudes}`.
    #[arg(long, short)]
    pub input: PathBuf,
    #[arg(long)]
    pub target_s: usize,
    #[arg(long, default_value = "ladder")]
    pub mode: RescaleMode,
    /// Lower past occupied levels, discarding them.
    #[arg(long)]
    pub force: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct DilateArgs {
    /// Operator name (`B1`, `D`, `D†`, ...) or `zero`.
    #[arg(long, required_unless_present = "matrix")]
    pub op: Option<String>,
    #[arg(long, required_unless_present = "matrix")]
    pub s: Option<usize>,
    /// Normalization `α`; defaults to the spectral norm.
    #[arg(long, value_parser = parse_real_arg)]
    pub alpha: Option<f64>,
    /// Matrix file to dilate instead of a named operator.
    #[arg(long, conflicts_with_all = ["op", "s"])]
    pub matrix: Option<PathBuf>,
    #[arg(long, default_value = "n1-ascending")]
    pub index_convention: IndexConvention,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: MatrixFormat,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

fn parse_complex_arg(src: &str) -> Result<num_complex::Complex64> {
    parse_complex(src)
}

fn parse_real_arg(src: &str) -> Result<f64> {
    let v = parse_complex(src)?;
    if v.im != 0.0 {
        return Err(Error::Parse(format!("expected a real value, got `{src}`")));
    }
    Ok(v.re)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match commands::dispatch(cli.command) {
        Ok(code) => code,
        Err(Error::Truncation { target, lost_norm }) => {
            eprintln!(
                "warning: lowering to s = {target} discards occupied levels; lost norm = {}",
                crate::export::fmt_f64(lost_norm)
            );
            eprintln!("rerun with --force to accept the loss");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}
