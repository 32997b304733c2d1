use std::path::PathBuf;

use fracspec_core::Grid;

use crate::args::{CommonArgs, Engine, Format, FunctionName};
use crate::error::CliError;

pub const DEFAULT_DOMAIN: (f64, f64) = (-16.0, 16.0);
pub const DEFAULT_POINTS: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSource {
    Gaussian,
    X2Gaussian,
    File(PathBuf),
}

/// Validated settings shared by `derive`, `figure` and `uncertainty`.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub domain: (f64, f64),
    pub n: usize,
    pub alphas: Vec<f64>,
    pub function: FunctionSource,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub engine: Option<Engine>,
}

impl RunConfig {
    pub fn from_args(args: &CommonArgs) -> Result<Self, CliError> {
        let domain = match args.domain.as_deref() {
            None => DEFAULT_DOMAIN,
            Some(&[a, b]) => (a, b),
            Some(_) => return Err(CliError::Config("--domain takes MIN MAX".into())),
        };
        for &a in &args.alpha {
            if !(a >= 0.0) || !a.is_finite() {
                return Err(CliError::Config(format!(
                    "--alpha: order must be finite and alpha >= 0, got {a}"
                )));
            }
        }
        let function = match (&args.input, args.function) {
            (Some(path), _) => FunctionSource::File(path.clone()),
            (None, Some(FunctionName::X2gaussian)) => FunctionSource::X2Gaussian,
            (None, _) => FunctionSource::Gaussian,
        };
        let config = Self {
            domain,
            n: args.points.unwrap_or(DEFAULT_POINTS),
            alphas: args.alpha.clone(),
            function,
            output_path: args.output.clone(),
            format: args.format,
            engine: args.engine,
        };
        config.grid()?;
        Ok(config)
    }

    /// The grid named by `--domain` and `--points`.
    pub fn grid(&self) -> Result<Grid, CliError> {
        Grid::new(self.domain.0, self.domain.1, self.n).map_err(|e| {
            CliError::Config(format!("--domain/--points: {e}"))
        })
    }
}
