//! The `1/√(2π)` Fourier pair on a periodic grid and the fractional
//! multipliers `(ip)^α` and `p^α`.
//!
//! `D^α f = F⁻¹[(ip)^α f̂]` and `P_α f = F⁻¹[p^α f̂] = i^{−α} D^α f`.
//!
//! For non-integer `α` the multiplier has a `|p|^α` cusp at the origin, so
//! `D^α f` decays only algebraically and its tails wrap around the periodic
//! grid. When the input decays to the grid boundary this wrap-around is
//! removed analytically from the moments of `f` (see [`CuspTreatment`]).

mod cusp;
mod product;

use alloc::vec::Vec;
use core::num::NonZeroU32;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fft::{Direction, Radix2};
use crate::grid::{Grid, SampledSignal, Spectrum};
use crate::math::{cis_quarter, cis_turns, is_integer, FRAC_1_SQRT_TAU};

pub use product::{product_rule, PRODUCT_RULE_MAX_N};

pub(crate) use cusp::quadratic_form_error;

/// Which fractional power a multiplier evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PowerKind {
    /// `(ip)^α = |p|^α e^{i·sign(p)·απ/2}`, the symbol of `D^α`.
    IpPower,
    /// `p^α = (ip)^α / i^α`: `|p|^α` for `p > 0`, `|p|^α e^{−iαπ}` for `p < 0`.
    PPower,
}

/// A branch-resolved fractional power of `ip` or `p`.
///
/// At `p = 0` the value is `0` for `α > 0` and `1` for `α = 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaPower {
    alpha: f64,
    kind: PowerKind,
}

impl AlphaPower {
    pub fn new(alpha: f64, kind: PowerKind) -> Result<Self> {
        if !(alpha >= 0.0) || !alpha.is_finite() {
            return Err(Error::NegativeAlpha(alpha));
        }
        Ok(Self { alpha, kind })
    }

    pub fn ip(alpha: f64) -> Result<Self> {
        Self::new(alpha, PowerKind::IpPower)
    }

    pub fn p(alpha: f64) -> Result<Self> {
        Self::new(alpha, PowerKind::PPower)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn eval(&self, p: f64) -> Complex64 {
        if self.alpha == 0.0 {
            return Complex64::new(1.0, 0.0);
        }
        if p == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let modulus = libm::pow(p.abs(), self.alpha);
        let quarter_turns = match (self.kind, p > 0.0) {
            (PowerKind::IpPower, true) => self.alpha,
            (PowerKind::IpPower, false) => -self.alpha,
            (PowerKind::PPower, true) => return Complex64::new(modulus, 0.0),
            (PowerKind::PPower, false) => -2.0 * self.alpha,
        };
        cis_quarter(quarter_turns) * modulus
    }
}

/// How the `p = 0` cusp of a non-integer multiplier is handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CuspTreatment {
    /// The literal discrete multiplier. Exact algebra between multipliers
    /// (semigroup, Parseval identities), but periodized tails.
    Bare,
    /// Subtract the wrap-around predicted from the moments of the input.
    /// Meaningful only for inputs that decay inside the grid.
    Corrected,
    /// `Corrected` when the input's boundary decay is below the threshold,
    /// `Bare` otherwise (periodic inputs such as grid plane waves).
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralOptions {
    /// Boundary decay below which an input counts as Schwartz-like.
    pub decay_threshold: f64,
    pub cusp: CuspTreatment,
    /// Coefficients with `|c| ≤ noise_floor·max|c|` are dropped before a
    /// multiplier with `α > 0` is applied, so FFT round-off at large `|p|`
    /// is not amplified by `|p|^α`. Zero disables.
    pub noise_floor: f64,
}

pub const DEFAULT_DECAY_THRESHOLD: f64 = 1e-10;
pub const DEFAULT_NOISE_FLOOR: f64 = 1e-15;

impl Default for SpectralOptions {
    fn default() -> Self {
        Self {
            decay_threshold: DEFAULT_DECAY_THRESHOLD,
            cusp: CuspTreatment::Auto,
            noise_floor: DEFAULT_NOISE_FLOOR,
        }
    }
}

impl SpectralOptions {
    /// The literal multiplier, no cusp correction.
    pub fn bare() -> Self {
        Self {
            cusp: CuspTreatment::Bare,
            ..Self::default()
        }
    }

    fn corrects(&self, signal: &SampledSignal, alpha: f64) -> bool {
        if is_integer(alpha) {
            return false;
        }
        match self.cusp {
            CuspTreatment::Bare => false,
            CuspTreatment::Corrected => true,
            CuspTreatment::Auto => signal.boundary_decay() < self.decay_threshold,
        }
    }
}

/// Whether the input satisfied the decay precondition of a fractional order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DecayStatus {
    Ok,
    /// Non-integer `α` applied to a signal that does not decay to the grid
    /// edges; the result carries periodization error.
    InsufficientDecay { boundary_decay: f64, threshold: f64 },
}

/// Result of applying `D^α` or `P_α`.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivative {
    pub signal: SampledSignal,
    pub status: DecayStatus,
    /// Whether the cusp correction was applied.
    pub cusp_corrected: bool,
}

impl Derivative {
    pub fn into_signal(self) -> SampledSignal {
        self.signal
    }
}

/// Per-grid transform plan: radix-2 FFT plus the `e^{−i p_k x_min}` offsets.
pub(crate) struct Transform {
    grid: Grid,
    plan: Radix2,
    offsets: Vec<Complex64>,
}

impl Transform {
    pub(crate) fn new(grid: Grid) -> Self {
        let ratio = grid.x_min() / grid.length();
        let offsets = (0..grid.len())
            .map(|k| cis_turns(-(grid.mode(k) as f64) * ratio))
            .collect();
        Self {
            grid,
            plan: Radix2::new(grid.len()),
            offsets,
        }
    }

    pub(crate) fn forward(&self, values: &[Complex64]) -> Vec<Complex64> {
        let mut buf = values.to_vec();
        self.plan.process(&mut buf, Direction::Forward);
        let scale = self.grid.dx() * FRAC_1_SQRT_TAU;
        for (c, o) in buf.iter_mut().zip(&self.offsets) {
            *c *= o * scale;
        }
        buf
    }

    pub(crate) fn inverse(&self, coeffs: &[Complex64]) -> Vec<Complex64> {
        let mut buf: Vec<Complex64> = coeffs
            .iter()
            .zip(&self.offsets)
            .map(|(c, o)| c * o.conj())
            .collect();
        self.plan.process(&mut buf, Direction::Inverse);
        let scale = self.grid.dp() * FRAC_1_SQRT_TAU;
        for v in buf.iter_mut() {
            *v *= scale;
        }
        buf
    }

    /// Applies `symbol` to `signal` with the cusp decision already made.
    pub(crate) fn apply(
        &self,
        signal: &SampledSignal,
        symbol: AlphaPower,
        noise_floor: f64,
        correct: bool,
    ) -> SampledSignal {
        if symbol.alpha == 0.0 {
            return signal.clone();
        }
        let mut coeffs = self.forward(signal.values());
        if noise_floor > 0.0 {
            let cut = noise_floor * crate::math::max_abs(&coeffs);
            for c in coeffs.iter_mut() {
                if c.norm() <= cut {
                    *c = Complex64::new(0.0, 0.0);
                }
            }
        }
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c *= symbol.eval(self.grid.frequency(k));
        }
        let mut values = self.inverse(&coeffs);
        if correct && !is_integer(symbol.alpha) {
            let err = cusp::position_error(signal, symbol.alpha, symbol.eval(1.0), symbol.eval(-1.0));
            for (v, e) in values.iter_mut().zip(err) {
                *v -= e;
            }
        }
        SampledSignal::rebuilt(self.grid, values)
    }
}

/// `f̂(p_k) ≈ (1/√2π) ∫ e^{−ipx} f(x) dx` as `(dx/√2π) Σ_j e^{−i p_k x_j} f_j`.
pub fn forward(signal: &SampledSignal) -> Spectrum {
    let grid = *signal.grid();
    let coeffs = Transform::new(grid).forward(signal.values());
    Spectrum::new(grid, coeffs).expect("transform preserves length")
}

/// `f(x_j) ≈ (dp/√2π) Σ_k e^{i p_k x_j} f̂_k`, the exact inverse of [`forward`].
pub fn inverse(spectrum: &Spectrum) -> SampledSignal {
    let grid = *spectrum.grid();
    let values = Transform::new(grid).inverse(spectrum.coeffs());
    SampledSignal::rebuilt(grid, values)
}

fn apply_with(signal: &SampledSignal, symbol: AlphaPower, options: &SpectralOptions) -> Derivative {
    let alpha = symbol.alpha;
    let status = if !is_integer(alpha) && !(signal.boundary_decay() < options.decay_threshold) {
        DecayStatus::InsufficientDecay {
            boundary_decay: signal.boundary_decay(),
            threshold: options.decay_threshold,
        }
    } else {
        DecayStatus::Ok
    };
    let correct = options.corrects(signal, alpha);
    let out = Transform::new(*signal.grid()).apply(signal, symbol, options.noise_floor, correct);
    Derivative {
        signal: out,
        status,
        cusp_corrected: correct,
    }
}

/// `D^α f` with default options.
pub fn fractional_derivative(signal: &SampledSignal, alpha: f64) -> Result<Derivative> {
    fractional_derivative_with(signal, alpha, &SpectralOptions::default())
}

pub fn fractional_derivative_with(
    signal: &SampledSignal,
    alpha: f64,
    options: &SpectralOptions,
) -> Result<Derivative> {
    Ok(apply_with(signal, AlphaPower::ip(alpha)?, options))
}

/// `P_α f = (−iD)^α f` with default options.
pub fn fractional_momentum(signal: &SampledSignal, alpha: f64) -> Result<Derivative> {
    fractional_momentum_with(signal, alpha, &SpectralOptions::default())
}

pub fn fractional_momentum_with(
    signal: &SampledSignal,
    alpha: f64,
    options: &SpectralOptions,
) -> Result<Derivative> {
    Ok(apply_with(signal, AlphaPower::p(alpha)?, options))
}

/// `(1/√2π) Σ_k |p_k|^α |f̂(p_k)| dp`, the discrete form of the `L^∞` bound
/// on `D^α f`.
pub fn multiplier_sup_bound(signal: &SampledSignal, alpha: f64) -> Result<f64> {
    let symbol = AlphaPower::ip(alpha)?;
    let spec = forward(signal);
    let g = spec.grid();
    let s: f64 = spec
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| symbol.eval(g.frequency(k)).norm() * c.norm())
        .sum();
    Ok(s * g.dp() * FRAC_1_SQRT_TAU)
}

/// `sup` over the central half of `|D^{n+1/k} f − D^n f|`.
pub fn theorem3_gap(signal: &SampledSignal, n: u32, k: NonZeroU32) -> Result<f64> {
    let base = f64::from(n);
    let near = base + 1.0 / f64::from(k.get());
    let d_near = fractional_derivative(signal, near)?.signal;
    let d_base = fractional_derivative(signal, base)?.signal;
    d_near.central_sup_distance(&d_base)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    /// `⟨a, b⟩ = Σ conj(a) b dx`
    Sesquilinear,
    /// `⟨a, b⟩ = Σ a b dx`
    Bilinear,
}

/// Branch used for the scalar `(−1)^α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinusOneBranch {
    /// `e^{+iαπ}`
    PlusIPi,
    /// `e^{−iαπ}`
    MinusIPi,
}

impl MinusOneBranch {
    pub fn power(self, alpha: f64) -> Complex64 {
        match self {
            Self::PlusIPi => cis_quarter(2.0 * alpha),
            Self::MinusIPi => cis_quarter(-2.0 * alpha),
        }
    }
}

fn pair(a: &SampledSignal, b: &SampledSignal, pairing: Pairing) -> Result<Complex64> {
    match pairing {
        Pairing::Sesquilinear => a.inner(b),
        Pairing::Bilinear => a.bilinear(b),
    }
}

/// `⟨D^α f, g⟩ − (−1)^α ⟨f, D^α g⟩` with the bare discrete multiplier.
pub fn duality_residual(
    f: &SampledSignal,
    g: &SampledSignal,
    alpha: f64,
    pairing: Pairing,
    branch: MinusOneBranch,
) -> Result<Complex64> {
    if !f.grid().same_as(g.grid()) {
        return Err(Error::GridMismatch);
    }
    let opts = SpectralOptions::bare();
    let df = fractional_derivative_with(f, alpha, &opts)?.signal;
    let dg = fractional_derivative_with(g, alpha, &opts)?.signal;
    Ok(pair(&df, g, pairing)? - branch.power(alpha) * pair(f, &dg, pairing)?)
}

/// `|⟨ψ, D^α f_n⟩ − ⟨ψ, D^α f⟩|` for `f_n = f + h/n`.
pub fn pairing_continuity_gap(
    psi: &SampledSignal,
    f: &SampledSignal,
    h: &SampledSignal,
    alpha: f64,
    n: NonZeroU32,
) -> Result<f64> {
    if !psi.grid().same_as(f.grid()) || !f.grid().same_as(h.grid()) {
        return Err(Error::GridMismatch);
    }
    let inv_n = 1.0 / f64::from(n.get());
    let f_n = f.zip_with(h, |a, b| a + b * inv_n)?;
    let defaults = SpectralOptions::default();
    let decays = f.boundary_decay() < defaults.decay_threshold
        && h.boundary_decay() < defaults.decay_threshold;
    let opts = SpectralOptions {
        cusp: if decays {
            CuspTreatment::Corrected
        } else {
            CuspTreatment::Bare
        },
        ..defaults
    };
    let d_fn = fractional_derivative_with(&f_n, alpha, &opts)?.signal;
    let d_f = fractional_derivative_with(f, alpha, &opts)?.signal;
    Ok((psi.inner(&d_fn)? - psi.inner(&d_f)?).norm())
}
