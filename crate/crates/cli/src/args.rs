use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hulthen",
    version,
    about = "Bound-state energies and eigenfunctions of the Hulthén potential",
    after_help = "Atomic units (hbar = mu = 1) are the default. Set HULTHEN_ATOMIC_UNITS=0 to require --mu and --hbar.\n\
                  Exit codes: 0 success, 1 numerical failure, 2 usage error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Subcommand)]
pub enum Command {
    /// Energies of the requested states, one row per (state, delta, c0, method).
    Energy,
    /// Samples of the normalized radial eigenfunction chi(r) and R(r) = chi/r.
    Wavefunction,
    /// Regenerates the closed-form table and the comparison with published numerics.
    Table,
    /// Runs several methods side by side and reports differences from NU.
    Compare,
    /// Runs the invariant checks and exits non-zero on any breach.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Args)]
pub struct VerifyArgs {
    /// Relative perturbation applied to the superpotential coefficient B.
    #[arg(long, value_name = "REL", default_value_t = 0.0)]
    pub perturb_b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// TOML file with defaults for any of these flags.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// States as spectroscopic labels (2p) or n_r,l pairs; space separated.
    #[arg(long = "state", global = true, num_args = 0.., value_name = "LABEL|N_R,L")]
    pub states: Option<Vec<String>>,

    /// Screening parameters.
    #[arg(long = "delta", global = true, num_args = 1.., value_name = "DELTA")]
    pub deltas: Option<Vec<f64>>,

    /// Charge strength Z e².
    #[arg(long, global = true)]
    pub z: Option<f64>,

    /// Reduced mass.
    #[arg(long, global = true)]
    pub mu: Option<f64>,

    #[arg(long, global = true)]
    pub hbar: Option<f64>,

    /// Centrifugal constants: 0, 1/12, or any number or fraction.
    #[arg(long = "c0", global = true, num_args = 1.., value_name = "C0")]
    pub c0s: Option<Vec<String>>,

    /// Comma-separated subset of nu, susy, numeric-exact, numeric-approx.
    #[arg(long = "method", global = true, value_delimiter = ',', value_name = "LIST")]
    pub methods: Option<Vec<String>>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Oracle mesh points (wavefunction: number of samples).
    #[arg(long, global = true)]
    pub grid_points: Option<usize>,

    /// Outer radius in units of 1/delta.
    #[arg(long, global = true)]
    pub rmax_factor: Option<f64>,

    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Reduced verification sweep (2p and 3p only).
    #[arg(long, global = true)]
    pub quick: bool,
}
