//! Curve data for the four figures.

use fracspec_core::oracles::{gaussian_deriv, x2gaussian_deriv};
use fracspec_core::quantum::{uncertainty_check, uncertainty_rhs, StateVector};
use fracspec_core::spectral::fractional_derivative;
use fracspec_core::{Complex64, Grid, SampledSignal};

use crate::args::Engine;
use crate::error::CliError;
use crate::io::{Curve, Table};

pub const FIG1_ALPHAS: [f64; 4] = [0.0, 0.02, 0.1, 0.5];
pub const FIG2_ALPHAS: [f64; 5] = [4.5, 4.8, 5.0, 5.2, 5.5];
pub const FIG3_ALPHAS: [f64; 4] = FIG1_ALPHAS;

/// `x ∈ [−4, 4]` in steps of 0.01.
pub fn plot_xs() -> Vec<f64> {
    (-400..=400).map(|i| f64::from(i) / 100.0).collect()
}

/// `α ∈ [0, 6]` in steps of 0.01.
pub fn plot_alphas() -> Vec<f64> {
    (0..=600).map(|i| f64::from(i) / 100.0).collect()
}

pub enum Figure {
    /// Derivative curves against `x`.
    Curves(Vec<Curve>),
    /// The uncertainty bound against `α`.
    Bound(Table),
}

pub fn figure(id: u32, engine: Engine, grid: Grid) -> Result<Figure, CliError> {
    match id {
        1 => derivative_curves(&FIG1_ALPHAS, gaussian_deriv, |x| (-x * x).exp(), engine, grid),
        2 => derivative_curves(&FIG2_ALPHAS, gaussian_deriv, |x| (-x * x).exp(), engine, grid),
        3 => derivative_curves(&FIG3_ALPHAS, x2gaussian_deriv, |x| x * x * (-x * x).exp(), engine, grid),
        4 => bound_table(engine, grid),
        _ => Err(CliError::Config(format!("figure id must be 1, 2, 3 or 4, got {id}"))),
    }
}

fn derivative_curves(
    alphas: &[f64],
    closed: fn(f64, f64) -> fracspec_core::Result<Complex64>,
    f: fn(f64) -> f64,
    engine: Engine,
    grid: Grid,
) -> Result<Figure, CliError> {
    let mut curves = Vec::with_capacity(alphas.len());
    match engine {
        Engine::Oracle => {
            let xs = plot_xs();
            for &a in alphas {
                let values = xs.iter().map(|&x| closed(a, x)).collect::<Result<Vec<_>, _>>()?;
                curves.push(Curve::new(Some(a), xs.clone(), &values));
            }
        }
        Engine::Spectral => {
            let signal = fracspec_core::grid::sample_real(f, grid)?;
            let window: Vec<usize> = (0..grid.len()).filter(|&j| grid.x(j).abs() <= 4.0).collect();
            let xs: Vec<f64> = window.iter().map(|&j| grid.x(j)).collect();
            for &a in alphas {
                let d: SampledSignal = fractional_derivative(&signal, a)?.signal;
                let values: Vec<Complex64> = window.iter().map(|&j| d.values()[j]).collect();
                curves.push(Curve::new(Some(a), xs.clone(), &values));
            }
        }
    }
    Ok(Figure::Curves(curves))
}

fn bound_table(engine: Engine, grid: Grid) -> Result<Figure, CliError> {
    let alphas = plot_alphas();
    let rhs: Vec<f64> = alphas.iter().map(|&a| uncertainty_rhs(a)).collect();
    let mut table = Table {
        header: vec!["alpha".into(), "rhs".into()],
        columns: vec![alphas.clone(), rhs],
    };
    if engine == Engine::Spectral {
        let state = StateVector::gaussian(grid)?;
        let numeric = alphas
            .iter()
            .map(|&a| {
                if a < 1.0 {
                    Ok(f64::NAN)
                } else {
                    uncertainty_check(a, &state).map(|r| r.rhs_bound)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        table.header.push("numeric".into());
        table.columns.push(numeric);
    }
    Ok(Figure::Bound(table))
}
