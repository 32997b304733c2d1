//! Correction of the `|p|^β` cusp at `p = 0` in frequency-grid Riemann sums.
//!
//! For a smooth `G` and step `h`, the generalized Euler–Maclaurin expansion
//! (Navot) gives
//!
//! ```text
//! Σ_{k≥1} h (kh)^β G(kh) − ∫_0^∞ p^β G(p) dp = Σ_j ζ(−β−j) h^{β+j+1} G^{(j)}(0)/j!
//! ```
//!
//! A symbol `|p|^β φ±` summed over both half-lines therefore carries the error
//! `Σ_j κ_j G^{(j)}(0)` with `κ_j = ζ(−β−j) h^{β+j+1}/j! · (φ₊ + (−1)^j φ₋)`.
//! On the position side this is exactly the wrap-around of the algebraic
//! tails of `D^α f` onto the periodic grid. The expansion vanishes
//! identically for integer `β ≥ 1`.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::grid::SampledSignal;
use crate::math::{binomial, FRAC_1_SQRT_TAU};
use crate::specfun::zeta_neg;

/// Number of Taylor orders kept in the correction.
pub(crate) const CUSP_ORDER: usize = 16;

pub(crate) fn weights(
    beta: f64,
    h: f64,
    phase_plus: Complex64,
    phase_minus: Complex64,
    order: usize,
) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(order + 1);
    let mut hpow = libm::pow(h, beta + 1.0);
    let mut fact = 1.0;
    for j in 0..=order {
        if j > 0 {
            fact *= j as f64;
            hpow *= h;
        }
        let phase = if j % 2 == 0 {
            phase_plus + phase_minus
        } else {
            phase_plus - phase_minus
        };
        out.push(phase * (zeta_neg(beta + j as f64) * hpow / fact));
    }
    out
}

/// Derivatives `f̂_c^{(m)}(0)`, `m = 0..=order`, of the transform of the
/// signal re-centred on the grid midpoint:
/// `(1/√2π) Σ_j (−i y_j)^m f_j dx` with `y_j = x_j − center`.
pub(crate) fn transform_derivatives_at_zero(signal: &SampledSignal, order: usize) -> Vec<Complex64> {
    let grid = signal.grid();
    let c = grid.center();
    let mut moments = alloc::vec![Complex64::new(0.0, 0.0); order + 1];
    for (j, v) in signal.values().iter().enumerate() {
        let y = grid.x(j) - c;
        let mut ypow = 1.0;
        for m in moments.iter_mut() {
            *m += v * ypow;
            ypow *= y;
        }
    }
    let mut minus_i_pow = Complex64::new(1.0, 0.0);
    for m in moments.iter_mut() {
        *m *= minus_i_pow * (grid.dx() * FRAC_1_SQRT_TAU);
        minus_i_pow *= Complex64::new(0.0, -1.0);
    }
    moments
}

/// Wrap-around error of the bare multiplier with cusp `|p|^β φ±`, as values
/// on the grid (subtract from the bare result).
pub(crate) fn position_error(
    signal: &SampledSignal,
    beta: f64,
    phase_plus: Complex64,
    phase_minus: Complex64,
) -> Vec<Complex64> {
    let grid = signal.grid();
    let kappa = weights(beta, grid.dp(), phase_plus, phase_minus, CUSP_ORDER);
    let fhat = transform_derivatives_at_zero(signal, CUSP_ORDER);
    // E(y) = (1/√2π) Σ_j κ_j Σ_r C(j,r) f̂^{(j−r)}(0) (iy)^r  =  Σ_r e_r y^r
    let mut poly = Vec::with_capacity(CUSP_ORDER + 1);
    let mut i_pow = Complex64::new(1.0, 0.0);
    for r in 0..=CUSP_ORDER {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in r..=CUSP_ORDER {
            acc += kappa[j] * fhat[j - r] * binomial(j, r);
        }
        poly.push(acc * i_pow * FRAC_1_SQRT_TAU);
        i_pow *= Complex64::new(0.0, 1.0);
    }
    let c = grid.center();
    grid.xs()
        .map(|x| {
            let y = x - c;
            poly.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, e| acc * y + e)
        })
        .collect()
}

/// Error of `Σ_{k≠0} h |p_k|^β φ± |f̂(p_k)|²` against the integral.
pub(crate) fn quadratic_form_error(
    signal: &SampledSignal,
    beta: f64,
    phase_plus: Complex64,
    phase_minus: Complex64,
) -> Complex64 {
    let kappa = weights(beta, signal.grid().dp(), phase_plus, phase_minus, CUSP_ORDER);
    let fhat = transform_derivatives_at_zero(signal, CUSP_ORDER);
    // G = f̂ conj(f̂),  G^{(j)}(0) = Σ_m C(j,m) f̂^{(m)}(0) conj(f̂^{(j−m)}(0))
    kappa
        .iter()
        .enumerate()
        .map(|(j, k)| {
            let g: Complex64 = (0..=j)
                .map(|m| fhat[m] * fhat[j - m].conj() * binomial(j, m))
                .sum();
            k * g
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::cis_quarter;

    #[test]
    fn weights_vanish_for_integer_orders() {
        for beta in [1.0, 2.0, 3.0, 4.0] {
            let w = weights(beta, 0.3, cis_quarter(beta), cis_quarter(-beta), 10);
            for k in w {
                assert!(k.norm() < 1e-18, "beta={beta}");
            }
        }
    }

    #[test]
    fn corrects_a_plain_riemann_sum() {
        // ∫ |p|^β e^{-p²} dp = Γ((β+1)/2); Riemann sum with h = 0.25 plus correction
        let beta = 0.3;
        let h = 0.25;
        let mut sum = 0.0;
        for k in 1..400 {
            let p = k as f64 * h;
            sum += 2.0 * h * libm::pow(p, beta) * libm::exp(-p * p);
        }
        // G = e^{-p²}: G^{(2m)}(0) = (-1)^m (2m)!/m!, odd derivatives vanish
        let kappa = weights(beta, h, Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0), 16);
        let mut err = 0.0;
        let mut m_fact = 1.0;
        let mut two_m_fact = 1.0;
        for m in 0..=8usize {
            if m > 0 {
                m_fact *= m as f64;
                two_m_fact *= (2 * m - 1) as f64 * (2 * m) as f64;
            }
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            err += kappa[2 * m].re * sign * two_m_fact / m_fact;
        }
        let exact = crate::specfun::gamma((beta + 1.0) / 2.0).unwrap();
        assert!((sum - exact).abs() > 1e-3);
        assert!((sum - err - exact).abs() < 1e-9, "{}", sum - err - exact);
    }
}
