//! Command-line and HTTP front end for `logiseed`.
//!
//! Every subcommand renders to a `String` so the binary, the HTTP server and
//! the tests all go through the same code path.

pub mod commands;
pub mod server;

use clap::{Args, Parser, Subcommand, ValueEnum};
use logiseed::placement::Mode;
use thiserror::Error;

/// Overrides the default cap on `width · height`.
pub const MAX_CELLS_ENV: &str = "CHAOS_SEED_MAX_CELLS";

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input; exit status 2.
    #[error("{0}")]
    Invalid(String),
    /// The server could not start; exit status 3.
    #[error("{0}")]
    Startup(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Startup(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl From<logiseed::Error> for CliError {
    fn from(e: logiseed::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "logiseed",
    version,
    about = "Reproducible randomness from the logistic map"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a logistic sequence.
    Gen(GenArgs),
    /// Emit the placement order of every grid cell.
    Place(PlaceArgs),
    /// Compare logistic and MT19937 statistics.
    Stats(StatsArgs),
    /// Export bifurcation diagram samples.
    Bifurcate(BifurcateArgs),
    /// Serve placements over HTTP.
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SeedArgs {
    /// Initial state, a decimal in (0, 1).
    #[arg(long, allow_hyphen_values = true)]
    pub x0: String,
    /// Map parameter, a decimal in [3.57, 4].
    #[arg(long, allow_hyphen_values = true)]
    pub r: String,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub seed: SeedArgs,
    #[arg(long = "len")]
    pub length: usize,
    #[arg(long, default_value_t = logiseed::DEFAULT_BURN_IN)]
    pub burn_in: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PlaceArgs {
    #[command(flatten)]
    pub seed: SeedArgs,
    #[arg(long)]
    pub width: usize,
    #[arg(long)]
    pub height: usize,
    #[arg(long, default_value = "competition")]
    pub mode: Mode,
    /// Keep only the first k placements.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, default_value_t = logiseed::DEFAULT_BURN_IN)]
    pub burn_in: usize,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct StatsArgs {
    #[arg(long, default_value = "0.25", allow_hyphen_values = true)]
    pub x0: String,
    #[arg(long, default_value = "3.995", allow_hyphen_values = true)]
    pub r: String,
    #[arg(long, default_value_t = 624)]
    pub mt_seed: u32,
    #[arg(long = "len", default_value_t = 1000)]
    pub length: usize,
    #[arg(long, default_value_t = logiseed::DEFAULT_BURN_IN)]
    pub burn_in: usize,
    #[arg(long, default_value_t = logiseed::stats::DEFAULT_BINS)]
    pub bins: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct BifurcateArgs {
    #[arg(long, default_value_t = 2.5, allow_hyphen_values = true)]
    pub r_min: f64,
    #[arg(long, default_value_t = 4.0, allow_hyphen_values = true)]
    pub r_max: f64,
    #[arg(long, default_value_t = 1000)]
    pub r_steps: usize,
    #[arg(long, default_value_t = 500)]
    pub settle: usize,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub x0: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long, default_value = "127.0.0.1")]
    pub host: String,
}

/// Grid cap from [`MAX_CELLS_ENV`], falling back to the library default.
pub fn max_cells_from_env() -> Result<usize, CliError> {
    match std::env::var(MAX_CELLS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Invalid(format!(
                "{MAX_CELLS_ENV} must be a positive integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(logiseed::placement::DEFAULT_MAX_CELLS),
    }
}
