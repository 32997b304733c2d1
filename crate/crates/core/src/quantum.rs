//! Position / fractional-momentum algebra on sampled states.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{sample_real, Grid, SampledSignal};
use crate::math::{cis_quarter, is_integer, FRAC_1_SQRT_2, PI};
use crate::specfun::gamma;
use crate::spectral::{
    self, quadratic_form_error, AlphaPower, CuspTreatment, SpectralOptions, DEFAULT_DECAY_THRESHOLD,
};

/// Tolerance on `|‖φ‖ − 1|` for operations that need a normalized state.
pub const NORM_TOL: f64 = 1e-10;
/// Slack allowed in `product ≥ rhs_bound`.
pub const BOUND_SLACK: f64 = 1e-9;

/// A sampled wavefunction together with its discrete `L²` norm.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    signal: SampledSignal,
    norm: f64,
}

impl StateVector {
    pub fn new(signal: SampledSignal) -> Self {
        let norm = signal.l2_norm();
        Self { signal, norm }
    }

    /// Rescales to unit norm.
    pub fn normalized(signal: SampledSignal) -> Self {
        let norm = signal.l2_norm();
        let unit = signal.scale(Complex64::new(1.0 / norm, 0.0));
        Self::new(unit)
    }

    /// `φ(x) = (2/π)^{1/4} e^{−x²}`.
    pub fn gaussian(grid: Grid) -> Result<Self> {
        let c = libm::pow(2.0 / PI, 0.25);
        Ok(Self::new(sample_real(|x| c * libm::exp(-x * x), grid)?))
    }

    pub fn signal(&self) -> &SampledSignal {
        &self.signal
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm - 1.0).abs() < NORM_TOL
    }

    fn require_normalized(&self) -> Result<()> {
        if self.is_normalized() {
            Ok(())
        } else {
            Err(Error::NotNormalized(self.norm))
        }
    }
}

/// Both sides of a commutator identity and their central-half distance.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorCheck {
    pub lhs: SampledSignal,
    pub rhs: SampledSignal,
    pub gap: f64,
}

fn commutator_preconditions(f: &SampledSignal, alpha: f64) -> Result<SpectralOptions> {
    if !(alpha >= 0.0) || !alpha.is_finite() {
        return Err(Error::NegativeAlpha(alpha));
    }
    if alpha > 0.0 && alpha < 1.0 {
        return Err(Error::AlphaInForbiddenRange(alpha));
    }
    if !(f.boundary_decay() < DEFAULT_DECAY_THRESHOLD) {
        return Err(Error::InsufficientDecay {
            boundary_decay: f.boundary_decay(),
            threshold: DEFAULT_DECAY_THRESHOLD,
        });
    }
    Ok(SpectralOptions {
        cusp: CuspTreatment::Corrected,
        ..SpectralOptions::default()
    })
}

fn derivative(f: &SampledSignal, alpha: f64, opts: &SpectralOptions) -> Result<SampledSignal> {
    Ok(spectral::fractional_derivative_with(f, alpha, opts)?.signal)
}

fn momentum(f: &SampledSignal, alpha: f64, opts: &SpectralOptions) -> Result<SampledSignal> {
    Ok(spectral::fractional_momentum_with(f, alpha, opts)?.signal)
}

fn sub(a: &SampledSignal, b: &SampledSignal) -> Result<SampledSignal> {
    a.zip_with(b, |u, v| u - v)
}

/// `[D^α, x] f = D^α(x f) − x D^α f` against `α D^{α−1} f`.
pub fn commutator_dx(f: &SampledSignal, alpha: f64) -> Result<CommutatorCheck> {
    let opts = commutator_preconditions(f, alpha)?;
    let lhs = sub(&derivative(&f.times_x(), alpha, &opts)?, &derivative(f, alpha, &opts)?.times_x())?;
    let rhs = if alpha == 0.0 {
        SampledSignal::zeros(*f.grid())
    } else {
        derivative(f, alpha - 1.0, &opts)?.scale(Complex64::new(alpha, 0.0))
    };
    let gap = lhs.central_sup_distance(&rhs)?;
    Ok(CommutatorCheck { lhs, rhs, gap })
}

/// `[x, P_α] f = x P_α f − P_α(x f)`, which should equal `iα P_{α−1} f`.
pub fn x_p_commutator(f: &SampledSignal, alpha: f64) -> Result<SampledSignal> {
    let opts = commutator_preconditions(f, alpha)?;
    sub(&momentum(f, alpha, &opts)?.times_x(), &momentum(&f.times_x(), alpha, &opts)?)
}

/// `[A_α, B_α] f` by composition, with `A_α = (x + iP_α)/√2` and
/// `B_α = (x − iP_α)/√2`, against `α P_{α−1} f`.
pub fn commutator_ladder(f: &SampledSignal, alpha: f64) -> Result<CommutatorCheck> {
    let opts = commutator_preconditions(f, alpha)?;
    let ladder = |u: &SampledSignal, sign: f64| -> Result<SampledSignal> {
        let pu = momentum(u, alpha, &opts)?;
        u.times_x()
            .zip_with(&pu, |xu, p| (xu + Complex64::new(0.0, sign) * p) * FRAC_1_SQRT_2)
    };
    let a_of_b = ladder(&ladder(f, -1.0)?, 1.0)?;
    let b_of_a = ladder(&ladder(f, 1.0)?, -1.0)?;
    let lhs = sub(&a_of_b, &b_of_a)?;
    let rhs = if alpha == 0.0 {
        SampledSignal::zeros(*f.grid())
    } else {
        momentum(f, alpha - 1.0, &opts)?.scale(Complex64::new(alpha, 0.0))
    };
    let gap = lhs.central_sup_distance(&rhs)?;
    Ok(CommutatorCheck { lhs, rhs, gap })
}

/// `⟨φ, Xφ⟩ = Σ conj(φ_j) (Xφ)_j dx`.
pub fn expectation(op_result: &SampledSignal, state: &StateVector) -> Result<Complex64> {
    state.require_normalized()?;
    state.signal.inner(op_result)
}

/// `α 2^{(α−3)/2} Γ(α/2) |cos((α−1)π/2)| / √π`, the closed-form uncertainty
/// bound for the Gaussian state.
///
/// Meaningful for `α ≥ 1`; smaller orders evaluate the same expression (with
/// `αΓ(α/2) → 2` at `α = 0`) for plotting.
pub fn uncertainty_rhs(alpha: f64) -> f64 {
    let alpha_gamma = if alpha == 0.0 {
        2.0
    } else {
        alpha * gamma(0.5 * alpha).unwrap_or(f64::NAN)
    };
    let cos = cis_quarter(alpha - 1.0).re.abs();
    alpha_gamma * libm::pow(2.0, 0.5 * (alpha - 3.0)) / libm::sqrt(PI) * cos
}

/// Outcome of testing `Δx ΔP_α ≥ α|⟨P_{α−1}⟩|/2` on a state.
///
/// `ΔP_α` uses `⟨|p^α|²⟩`, the modulus-squared symbol, for the second moment
/// and `|⟨P_α⟩|²` for the squared mean, i.e. `ΔP_α = ‖(P_α − ⟨P_α⟩)φ‖`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UncertaintyReport {
    pub alpha: f64,
    pub delta_x: f64,
    pub delta_p_alpha: f64,
    pub product: f64,
    pub rhs_bound: f64,
    pub satisfied: bool,
    /// `⟨P_α⟩`
    pub mean_p_alpha: Complex64,
    /// `⟨P_{α−1}⟩`
    pub mean_p_alpha_minus_one: Complex64,
}

/// `Σ_k w(p_k) |φ̂_k|² dp`, cusp-corrected for non-integer powers.
fn spectral_quadratic_form(state: &SampledSignal, symbol: AlphaPower, modulus: bool) -> Complex64 {
    let spec = spectral::forward(state);
    let g = spec.grid();
    let eval = |p: f64| {
        let s = symbol.eval(p);
        if modulus {
            Complex64::new(s.norm(), 0.0)
        } else {
            s
        }
    };
    let raw: Complex64 = spec
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| eval(g.frequency(k)) * c.norm_sqr())
        .sum::<Complex64>()
        * g.dp();
    if is_integer(symbol.alpha()) {
        raw
    } else {
        raw - quadratic_form_error(state, symbol.alpha(), eval(1.0), eval(-1.0))
    }
}

/// Evaluates both sides of the uncertainty inequality for `x` and `P_α`.
pub fn uncertainty_check(alpha: f64, state: &StateVector) -> Result<UncertaintyReport> {
    if !(alpha >= 1.0) || !alpha.is_finite() {
        return Err(Error::OrderBelowOne(alpha));
    }
    state.require_normalized()?;
    let phi = &state.signal;
    if !(phi.boundary_decay() < DEFAULT_DECAY_THRESHOLD) {
        return Err(Error::InsufficientDecay {
            boundary_decay: phi.boundary_decay(),
            threshold: DEFAULT_DECAY_THRESHOLD,
        });
    }
    let grid = phi.grid();
    let (mut m1, mut m2) = (0.0, 0.0);
    for (j, v) in phi.values().iter().enumerate() {
        let x = grid.x(j);
        let w = v.norm_sqr();
        m1 += x * w;
        m2 += x * x * w;
    }
    m1 *= grid.dx();
    m2 *= grid.dx();
    let delta_x = libm::sqrt((m2 - m1 * m1).max(0.0));

    let mean_p_alpha = spectral_quadratic_form(phi, AlphaPower::p(alpha)?, false);
    let second = spectral_quadratic_form(phi, AlphaPower::p(2.0 * alpha)?, true).re;
    let delta_p_alpha = libm::sqrt((second - mean_p_alpha.norm_sqr()).max(0.0));
    let mean_p_alpha_minus_one = spectral_quadratic_form(phi, AlphaPower::p(alpha - 1.0)?, false);

    let product = delta_x * delta_p_alpha;
    let rhs_bound = 0.5 * alpha * mean_p_alpha_minus_one.norm();
    Ok(UncertaintyReport {
        alpha,
        delta_x,
        delta_p_alpha,
        product,
        rhs_bound,
        satisfied: product >= rhs_bound - BOUND_SLACK,
        mean_p_alpha,
        mean_p_alpha_minus_one,
    })
}

/// `⟨P_α g, f⟩ − ⟨g, P_α f⟩` with the bare discrete multiplier.
pub fn symmetry_residual(f: &SampledSignal, g: &SampledSignal, alpha: f64) -> Result<Complex64> {
    if !f.grid().same_as(g.grid()) {
        return Err(Error::GridMismatch);
    }
    let opts = SpectralOptions::bare();
    let pg = momentum(g, alpha, &opts)?;
    let pf = momentum(f, alpha, &opts)?;
    Ok(pg.inner(f)? - g.inner(&pf)?)
}
