//! Closed-form fractional derivatives and an independent quadrature reference.
//!
//! These never touch the FFT path. The Gaussian rules evaluate the printed
//! Gamma/`₁F₁` expressions term by term; `e^{kx}` and `xⁿ` are distributional
//! rules that a periodic grid cannot represent, so they exist only here.

mod quadrature;

use core::fmt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{Grid, SampledSignal};
use crate::math::{cis_quarter, cis_turns, is_integer, FRAC_1_SQRT_TAU, PI};
use crate::specfun::{gamma, kummer_1f1};
use crate::spectral::AlphaPower;

pub use quadrature::MAX_DEPTH as QUADRATURE_MAX_DEPTH;

/// Absolute tolerance of [`quadrature_reference`].
pub const QUADRATURE_TOL: f64 = 1e-11;

fn f11(a: f64, b: f64, z: f64) -> Result<f64> {
    Ok(kummer_1f1(a, b, z)?.value)
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha >= 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::NegativeAlpha(alpha))
    }
}

/// `D^α e^{−x²}`:
///
/// ```text
/// (2^α/√π) [ cos(απ/2) Γ((1+α)/2) ₁F₁((1+α)/2, 1/2, −x²)
///          − α x sin(απ/2) Γ(α/2) ₁F₁(1+α/2, 3/2, −x²) ]
/// ```
///
/// The second term is zero at `α = 0`.
pub fn gaussian_deriv(alpha: f64, x: f64) -> Result<Complex64> {
    check_alpha(alpha)?;
    let z = -x * x;
    let phase = cis_quarter(alpha); // cos(απ/2) + i sin(απ/2)
    let even = phase.re * gamma(0.5 * (1.0 + alpha))? * f11(0.5 * (1.0 + alpha), 0.5, z)?;
    let odd = if alpha == 0.0 {
        0.0
    } else {
        alpha * x * phase.im * gamma(0.5 * alpha)? * f11(1.0 + 0.5 * alpha, 1.5, z)?
    };
    let value = libm::pow(2.0, alpha) / libm::sqrt(PI) * (even - odd);
    Ok(Complex64::new(value, 0.0))
}

/// `D^α (x² e^{−x²})`:
///
/// ```text
/// (2^{α−2}/√π) [ (i^α + (−i)^α) Γ((1+α)/2) (₁F₁((1+α)/2, 1/2, −x²) − (1+α) ₁F₁((3+α)/2, 1/2, −x²))
///              − 2i((−i)^α − i^α) x Γ(1+α/2) (₁F₁((2+α)/2, 3/2, −x²) − (2+α) ₁F₁((4+α)/2, 3/2, −x²)) ]
/// ```
///
/// with `(±i)^α = e^{±iαπ/2}`.
pub fn x2gaussian_deriv(alpha: f64, x: f64) -> Result<Complex64> {
    check_alpha(alpha)?;
    let z = -x * x;
    let i_a = cis_quarter(alpha);
    let mi_a = cis_quarter(-alpha);
    let even = (i_a + mi_a)
        * gamma(0.5 * (1.0 + alpha))?
        * (f11(0.5 * (1.0 + alpha), 0.5, z)? - (1.0 + alpha) * f11(0.5 * (3.0 + alpha), 0.5, z)?);
    let odd = Complex64::new(0.0, 2.0)
        * (mi_a - i_a)
        * x
        * gamma(1.0 + 0.5 * alpha)?
        * (f11(0.5 * (2.0 + alpha), 1.5, z)? - (2.0 + alpha) * f11(0.5 * (4.0 + alpha), 1.5, z)?);
    Ok((even - odd) * (libm::pow(2.0, alpha - 2.0) / libm::sqrt(PI)))
}

/// `D^α e^{kx} = k^α e^{kx}` for `k > 0`.
pub fn exp_rule(k: f64, alpha: f64, x: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(k > 0.0) {
        return Err(Error::NonPositiveK(k));
    }
    Ok(libm::pow(k, alpha) * libm::exp(k * x))
}

/// Value of a distributional rule, or `Undefined` where the pairing that
/// defines it does not exist.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MonomialValue {
    Value(f64),
    Undefined,
}

impl MonomialValue {
    pub fn value(self) -> Option<f64> {
        match self {
            Self::Value(v) => Some(v),
            Self::Undefined => None,
        }
    }
}

/// `D^α xⁿ`: the ordinary derivative for integer `α ≤ n`, zero for any
/// `α > n`, undefined for non-integer `α < n`.
pub fn monomial_deriv(n: u32, alpha: f64, x: f64) -> MonomialValue {
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return MonomialValue::Undefined;
    }
    let nf = f64::from(n);
    if alpha > nf {
        return MonomialValue::Value(0.0);
    }
    if !is_integer(alpha) {
        return MonomialValue::Undefined;
    }
    let order = alpha as u32;
    let coeff: f64 = (n - order + 1..=n).map(f64::from).product();
    MonomialValue::Value(coeff * libm::pow(x, f64::from(n - order)))
}

/// Function families with a closed-form fractional derivative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Family {
    /// `e^{−x²}`
    Gaussian,
    /// `x² e^{−x²}`
    X2Gaussian,
    /// `e^{kx}`, `k > 0`
    Exponential { k: f64 },
    /// `xⁿ`
    Monomial { n: u32 },
}

/// The set of orders for which a rule is defined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmissibleAlpha {
    AllNonNegative,
    /// `α = 0` or `α ≥ n`
    ZeroOrAtLeast(u32),
}

impl AdmissibleAlpha {
    /// Whether `alpha` lies in the set.
    pub fn contains(self, alpha: f64) -> bool {
        if !(alpha >= 0.0) || !alpha.is_finite() {
            return false;
        }
        match self {
            Self::AllNonNegative => true,
            Self::ZeroOrAtLeast(n) => alpha == 0.0 || alpha >= f64::from(n),
        }
    }
}

impl fmt::Display for AdmissibleAlpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AllNonNegative => write!(f, "alpha >= 0"),
            Self::ZeroOrAtLeast(n) => write!(f, "alpha = 0 or alpha >= {n}"),
        }
    }
}

/// An analytic rule with its admissibility range.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClosedForm {
    pub family: Family,
}

impl ClosedForm {
    pub fn new(family: Family) -> Result<Self> {
        if let Family::Exponential { k } = family {
            if !(k > 0.0) {
                return Err(Error::NonPositiveK(k));
            }
        }
        Ok(Self { family })
    }

    /// Admissible orders. For `xⁿ` integer orders below `n` are also
    /// defined (ordinary derivatives), see [`monomial_deriv`].
    pub fn admissible_alpha(&self) -> AdmissibleAlpha {
        match self.family {
            Family::Monomial { n } => AdmissibleAlpha::ZeroOrAtLeast(n),
            _ => AdmissibleAlpha::AllNonNegative,
        }
    }

    /// The function itself at `x`.
    pub fn value(&self, x: f64) -> f64 {
        match self.family {
            Family::Gaussian => libm::exp(-x * x),
            Family::X2Gaussian => x * x * libm::exp(-x * x),
            Family::Exponential { k } => libm::exp(k * x),
            Family::Monomial { n } => libm::pow(x, f64::from(n)),
        }
    }

    /// `D^α` at `x`; `None` where the rule is undefined.
    pub fn derivative(&self, alpha: f64, x: f64) -> Result<Option<Complex64>> {
        Ok(match self.family {
            Family::Gaussian => Some(gaussian_deriv(alpha, x)?),
            Family::X2Gaussian => Some(x2gaussian_deriv(alpha, x)?),
            Family::Exponential { k } => Some(Complex64::new(exp_rule(k, alpha, x)?, 0.0)),
            Family::Monomial { n } => monomial_deriv(n, alpha, x)
                .value()
                .map(|v| Complex64::new(v, 0.0)),
        })
    }
}

/// `(1/√2π) ∫ e^{ipx} (ip)^α f̂(p) dp` over `[−p_cutoff, p_cutoff]` by adaptive
/// Gauss–Kronrod quadrature, to absolute accuracy [`QUADRATURE_TOL`].
///
/// The range is split at the cusp `p = 0` and into panels no longer than one
/// period of `e^{ipx}`.
pub fn quadrature_reference(
    f_hat: impl Fn(f64) -> Complex64,
    alpha: f64,
    x: f64,
    p_cutoff: f64,
) -> Result<Complex64> {
    let symbol = AlphaPower::ip(alpha)?;
    let width = (2.0 * PI / x.abs().max(1.0)).min(0.25 * p_cutoff);
    let mut panels = quadrature::panels(-p_cutoff, 0.0, width);
    panels.extend(quadrature::panels(0.0, p_cutoff, width));
    let integrand = |p: f64| crate::math::cis(p * x) * symbol.eval(p) * f_hat(p);
    Ok(quadrature::integrate(integrand, &panels, QUADRATURE_TOL)? * FRAC_1_SQRT_TAU)
}

/// `f̂₁(p) = e^{−p²/4}/√2`, the transform of `e^{−x²}`.
pub fn gaussian_hat(p: f64) -> Complex64 {
    Complex64::new(libm::exp(-0.25 * p * p) * crate::math::FRAC_1_SQRT_2, 0.0)
}

/// `f̂₂(p) = (2 − p²) e^{−p²/4}/(4√2)`, the transform of `x² e^{−x²}`.
pub fn x2gaussian_hat(p: f64) -> Complex64 {
    Complex64::new(
        (2.0 - p * p) * libm::exp(-0.25 * p * p) * 0.25 * crate::math::FRAC_1_SQRT_2,
        0.0,
    )
}

/// A generalized eigenstate `P_α f = E f`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EigenstateSpec {
    pub alpha: f64,
    pub eigenvalue: f64,
    pub normalization: Complex64,
}

impl EigenstateSpec {
    pub fn new(alpha: f64, eigenvalue: f64) -> Self {
        Self {
            alpha,
            eigenvalue,
            normalization: Complex64::new(1.0, 0.0),
        }
    }

    /// The plane-wave frequency `q ≥ 0` with `q^α = E`, for the orders that
    /// admit plane-wave eigenstates: `α = 1`, `α = 2` and `α = 1/(2m+1)`.
    pub fn frequency(&self) -> Result<f64> {
        let (alpha, e) = (self.alpha, self.eigenvalue);
        let unsupported = Error::UnsupportedEigenstate {
            alpha,
            eigenvalue: e,
        };
        if !e.is_finite() {
            return Err(unsupported);
        }
        if alpha == 1.0 {
            return Ok(e);
        }
        if alpha == 2.0 {
            return if e > 0.0 { Ok(libm::sqrt(e)) } else { Err(unsupported) };
        }
        if let Some(odd) = odd_root_order(alpha) {
            // on the p^α branch only p ≥ 0 gives a real eigenvalue
            return if e >= 0.0 {
                Ok(libm::pow(e, f64::from(odd)))
            } else {
                Err(unsupported)
            };
        }
        Err(unsupported)
    }
}

/// `2m+1` when `α = 1/(2m+1)` with `m ≥ 1`.
fn odd_root_order(alpha: f64) -> Option<u32> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return None;
    }
    let inv = libm::round(1.0 / alpha);
    if inv >= 3.0 && inv % 2.0 == 1.0 && (1.0 / inv - alpha).abs() <= 1e-12 * alpha {
        Some(inv as u32)
    } else {
        None
    }
}

/// Samples the plane-wave eigenstate of `spec` on `grid`: `N e^{iqx}`, or
/// `N cos(√E x)/√E` for `α = 2`. The frequency must be an exact grid mode.
pub fn eigenstate_signal(spec: &EigenstateSpec, grid: Grid) -> Result<SampledSignal> {
    let q = spec.frequency()?;
    let dp = grid.dp();
    let m = libm::round(q / dp);
    let on_grid = (q - m * dp).abs() <= 1e-9 * q.abs().max(1.0);
    let m = m as i64;
    let mode_ok = grid.bin_of_mode(m).is_some() && (spec.alpha != 2.0 || grid.bin_of_mode(-m).is_some());
    if !on_grid || !mode_ok {
        return Err(Error::FrequencyOffGrid { q });
    }
    let n = grid.len() as i64;
    let ratio = grid.x_min() / grid.length();
    let base = cis_turns(m as f64 * ratio);
    let wave = |j: usize| base * cis_turns((m * j as i64).rem_euclid(n) as f64 / n as f64);
    let values = (0..grid.len())
        .map(|j| {
            let w = wave(j);
            if spec.alpha == 2.0 {
                spec.normalization * (w.re / q)
            } else {
                spec.normalization * w
            }
        })
        .collect();
    SampledSignal::new(grid, values)
}

#[cfg(test)]
mod tests;
