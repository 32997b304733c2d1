use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "fracspec", version, about = "Fourier-multiplier fractional derivatives")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fractional derivatives of a built-in function or a sampled CSV signal.
    Derive(CommonArgs),
    /// Data behind figures 1-4.
    Figure {
        /// Figure number (1-4).
        id: u32,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Position / fractional-momentum uncertainty for the Gaussian state.
    Uncertainty(CommonArgs),
    /// Run a check suite; exits 1 if any assertion fails.
    Check {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Grid interval.
    #[arg(long, num_args = 2, value_names = ["MIN", "MAX"], allow_negative_numbers = true)]
    pub domain: Option<Vec<f64>>,
    /// Number of samples (power of two).
    #[arg(long)]
    pub points: Option<usize>,
    /// Derivative order(s), comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub alpha: Vec<f64>,
    /// Built-in input function.
    #[arg(long, value_enum, conflicts_with = "input")]
    pub function: Option<FunctionName>,
    /// CSV signal with columns x,re[,im].
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Closed forms or the FFT engine.
    #[arg(long, value_enum)]
    pub engine: Option<Engine>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctionName {
    Gaussian,
    X2gaussian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Oracle,
    Spectral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Integer,
    Closedform,
    Commutator,
    Uncertainty,
    Convergence,
    Duality,
    Eigenstate,
    Parity,
    Monomial,
    All,
}

impl Suite {
    pub const EACH: [Suite; 9] = [
        Suite::Integer,
        Suite::Closedform,
        Suite::Commutator,
        Suite::Uncertainty,
        Suite::Convergence,
        Suite::Duality,
        Suite::Eigenstate,
        Suite::Parity,
        Suite::Monomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Integer => "integer",
            Suite::Closedform => "closedform",
            Suite::Commutator => "commutator",
            Suite::Uncertainty => "uncertainty",
            Suite::Convergence => "convergence",
            Suite::Duality => "duality",
            Suite::Eigenstate => "eigenstate",
            Suite::Parity => "parity",
            Suite::Monomial => "monomial",
            Suite::All => "all",
        }
    }
}
