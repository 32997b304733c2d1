//! Command implementations.

use fracspec_core::oracles::{ClosedForm, Family};
use fracspec_core::quantum::{uncertainty_check, uncertainty_rhs, StateVector};
use fracspec_core::spectral::{fractional_derivative, DecayStatus};
use fracspec_core::{Complex64, SampledSignal};
use serde::Serialize;

use crate::args::{Cli, Command, CommonArgs, Engine, Format, Suite};
use crate::checks::{all_passed, run_suite};
use crate::config::{FunctionSource, RunConfig};
use crate::error::CliError;
use crate::figures::{figure, Figure};
use crate::io::{self, emit_curves, with_sink, Curve, Table};

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Derive(args) => cmd_derive(&RunConfig::from_args(&args)?).map(|()| 0),
        Command::Figure { id, common } => cmd_figure(id, &RunConfig::from_args(&common)?).map(|()| 0),
        Command::Uncertainty(args) => cmd_uncertainty(&args),
        Command::Check { suite } => Ok(cmd_check(suite)),
    }
}

fn load_signal(config: &RunConfig) -> Result<SampledSignal, CliError> {
    match &config.function {
        FunctionSource::File(path) => io::read_signal_csv(path),
        FunctionSource::Gaussian => Ok(fracspec_core::grid::sample_real(|x| (-x * x).exp(), config.grid()?)?),
        FunctionSource::X2Gaussian => {
            Ok(fracspec_core::grid::sample_real(|x| x * x * (-x * x).exp(), config.grid()?)?)
        }
    }
}

pub fn cmd_derive(config: &RunConfig) -> Result<(), CliError> {
    if config.alphas.is_empty() {
        return Err(CliError::Config("--alpha: at least one order is required".into()));
    }
    let signal = load_signal(config)?;
    let grid = *signal.grid();
    let xs: Vec<f64> = grid.xs().collect();
    let mut curves = Vec::with_capacity(config.alphas.len());
    for &alpha in &config.alphas {
        let values: Vec<Complex64> = match config.engine.unwrap_or(Engine::Spectral) {
            Engine::Spectral => {
                let d = fractional_derivative(&signal, alpha)?;
                if let DecayStatus::InsufficientDecay { boundary_decay, threshold } = d.status {
                    eprintln!(
                        "warning: alpha={alpha}: boundary decay {boundary_decay:e} exceeds {threshold:e}; \
                         the result carries periodization error"
                    );
                }
                d.signal.into_values()
            }
            Engine::Oracle => {
                let family = match config.function {
                    FunctionSource::Gaussian => Family::Gaussian,
                    FunctionSource::X2Gaussian => Family::X2Gaussian,
                    FunctionSource::File(_) => {
                        return Err(CliError::Config(
                            "--engine oracle needs a built-in --function, not --input".into(),
                        ))
                    }
                };
                let closed = ClosedForm::new(family)?;
                xs.iter()
                    .map(|&x| Ok(closed.derivative(alpha, x)?.unwrap_or(Complex64::new(f64::NAN, 0.0))))
                    .collect::<Result<_, CliError>>()?
            }
        };
        curves.push(Curve::new(Some(alpha), xs.clone(), &values));
    }
    emit_curves(config.output_path.as_deref(), config.format, "x", &curves)
}

pub fn cmd_figure(id: u32, config: &RunConfig) -> Result<(), CliError> {
    let engine = config.engine.unwrap_or(Engine::Oracle);
    match figure(id, engine, config.grid()?)? {
        Figure::Curves(curves) => emit_curves(config.output_path.as_deref(), config.format, "x", &curves),
        Figure::Bound(table) => {
            let path = config.output_path.as_deref();
            match config.format {
                Format::Csv => with_sink(path, |w| table.write_csv(w)),
                Format::Json => {
                    let curves: Vec<Curve> = table.columns[1..]
                        .iter()
                        .map(|col| Curve {
                            alpha: None,
                            x: table.columns[0].clone(),
                            re: col.clone(),
                            im: vec![0.0; col.len()],
                        })
                        .collect();
                    with_sink(path, |w| io::write_json(w, &io::rounded(&curves)))
                }
            }
        }
    }
}

#[derive(Debug, Serialize)]
struct UncertaintyRow {
    alpha: f64,
    delta_x: f64,
    delta_p_alpha: f64,
    product: f64,
    rhs_bound: f64,
    closed_form: f64,
    satisfied: bool,
}

pub fn cmd_uncertainty(args: &CommonArgs) -> Result<i32, CliError> {
    let mut config = RunConfig::from_args(args)?;
    if config.alphas.is_empty() {
        config.alphas = vec![1.0, 1.5, 2.0, 3.0];
    }
    if let Some(&a) = config.alphas.iter().find(|&&a| a < 1.0) {
        return Err(CliError::Config(format!(
            "--alpha: the uncertainty relation needs alpha >= 1 (got {a}); for alpha < 1 the \
             commutator behind it is not defined"
        )));
    }
    let state = StateVector::gaussian(config.grid()?)?;
    let mut rows = Vec::with_capacity(config.alphas.len());
    for &alpha in &config.alphas {
        let r = uncertainty_check(alpha, &state)?;
        rows.push(UncertaintyRow {
            alpha,
            delta_x: r.delta_x,
            delta_p_alpha: r.delta_p_alpha,
            product: r.product,
            rhs_bound: r.rhs_bound,
            closed_form: uncertainty_rhs(alpha),
            satisfied: r.satisfied,
        });
    }
    let path = config.output_path.as_deref();
    match config.format {
        Format::Json => with_sink(path, |w| io::write_json(w, &rows))?,
        Format::Csv => {
            let header = ["alpha", "delta_x", "delta_p_alpha", "product", "rhs_bound", "closed_form", "satisfied"];
            let table = Table {
                header: header.iter().map(|h| h.to_string()).collect(),
                columns: vec![
                    rows.iter().map(|r| r.alpha).collect(),
                    rows.iter().map(|r| r.delta_x).collect(),
                    rows.iter().map(|r| r.delta_p_alpha).collect(),
                    rows.iter().map(|r| r.product).collect(),
                    rows.iter().map(|r| r.rhs_bound).collect(),
                    rows.iter().map(|r| r.closed_form).collect(),
                    rows.iter().map(|r| if r.satisfied { 1.0 } else { 0.0 }).collect(),
                ],
            };
            with_sink(path, |w| table.write_csv(w))?;
        }
    }
    Ok(if rows.iter().all(|r| r.satisfied) { 0 } else { CliError::EXIT_CHECK_FAILED })
}

pub fn cmd_check(suite: Suite) -> i32 {
    let lines = run_suite(suite);
    for l in &lines {
        println!("{l}");
    }
    let failed = lines.iter().filter(|l| l.outcome == crate::checks::Outcome::Fail).count();
    println!(
        "{} {}: {} checks, {failed} failed",
        if failed == 0 { "OK" } else { "FAILED" },
        suite.name(),
        lines.len()
    );
    if all_passed(&lines) {
        0
    } else {
        CliError::EXIT_CHECK_FAILED
    }
}
