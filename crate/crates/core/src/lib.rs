//! Fractional derivatives defined through the Fourier transform.
//!
//! `D^α f = F⁻¹[(ip)^α f̂(p)]` with the symmetric `1/√(2π)` transform pair,
//! evaluated on uniform periodic grids with a radix-2 FFT. Around the
//! multiplier the crate provides
//!
//! * [`grid`]: grids, their frequency duals, sampled signals and spectra,
//! * [`spectral`]: the transform pair, `D^α`, the fractional momentum
//!   `P_α = (−iD)^α` and the convergence / duality diagnostics,
//! * [`specfun`]: Gamma, Riemann zeta and the confluent hypergeometric `₁F₁`,
//! * [`oracles`]: closed-form derivatives of `e^{−x²}`, `x²e^{−x²}`,
//!   `e^{kx}`, `xⁿ`, an adaptive-quadrature reference and plane-wave eigenstates,
//! * [`quantum`]: commutators, ladder operators, expectation values and the
//!   uncertainty bound for `x` and `P_α`.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
mod fft;
pub mod grid;
pub mod math;
pub mod oracles;
pub mod quantum;
pub mod specfun;
pub mod spectral;

pub use error::{Error, Result};
pub use grid::{FrequencyGrid, Grid, SampledSignal, Spectrum};
pub use num_complex::Complex64;
pub use spectral::{AlphaPower, PowerKind};
