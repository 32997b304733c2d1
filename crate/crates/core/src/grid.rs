//! Uniform periodic grids, their frequency duals, sampled signals and spectra.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::math::TAU;

/// Fraction of samples at each end inspected for [`SampledSignal::boundary_decay`].
pub const BOUNDARY_FRACTION: f64 = 0.05;

/// Uniform sampling `x_j = x_min + j·dx`, `j = 0..n`, of `[x_min, x_max)`.
///
/// The right endpoint is excluded: the grid is a period of length
/// `x_max − x_min`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n: usize,
    dx: f64,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return Err(Error::DegenerateInterval { x_min, x_max });
        }
        if n < 8 || !n.is_power_of_two() {
            return Err(Error::NonPowerOfTwo(n));
        }
        Ok(Self {
            x_min,
            x_max,
            n,
            dx: (x_max - x_min) / n as f64,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dx(&self) -> f64 {
        self.dx
    }

    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn center(&self) -> f64 {
        0.5 * (self.x_min + self.x_max)
    }

    /// Frequency spacing `2π/(n·dx)`.
    pub fn dp(&self) -> f64 {
        TAU / self.length()
    }

    #[inline]
    pub fn x(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.dx
    }

    pub fn xs(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(move |j| self.x(j))
    }

    /// Signed mode number of bin `k`: `k` below `n/2`, `k − n` from `n/2` on
    /// (the Nyquist bin counts as negative).
    #[inline]
    pub fn mode(&self, k: usize) -> i64 {
        if k < self.n / 2 {
            k as i64
        } else {
            k as i64 - self.n as i64
        }
    }

    #[inline]
    pub fn frequency(&self, k: usize) -> f64 {
        self.mode(k) as f64 * self.dp()
    }

    /// Bin holding signed mode `m`, if `−n/2 ≤ m < n/2`.
    pub fn bin_of_mode(&self, m: i64) -> Option<usize> {
        let half = (self.n / 2) as i64;
        if m < -half || m >= half {
            None
        } else if m >= 0 {
            Some(m as usize)
        } else {
            Some((m + self.n as i64) as usize)
        }
    }

    pub fn frequencies(&self) -> FrequencyGrid {
        FrequencyGrid {
            p: (0..self.n).map(|k| self.frequency(k)).collect(),
        }
    }

    /// Index range of the central half of the grid, `n/4 .. 3n/4`.
    pub fn central_half(&self) -> core::ops::Range<usize> {
        self.n / 4..3 * self.n / 4
    }

    /// Same sampling (endpoints and size) as `other`.
    pub fn same_as(&self, other: &Grid) -> bool {
        self.n == other.n && self.x_min == other.x_min && self.x_max == other.x_max
    }
}

/// Frequencies `p_k` in FFT order: `2πk/(n·dx)` for `k < n/2`, then
/// `2π(k−n)/(n·dx)`; the Nyquist bin is `−π/dx`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrequencyGrid {
    p: Vec<f64>,
}

impl FrequencyGrid {
    pub fn as_slice(&self) -> &[f64] {
        &self.p
    }

    pub fn max_abs(&self) -> f64 {
        self.p.iter().fold(0.0, |m, p| m.max(p.abs()))
    }
}

/// Complex samples of a function on a [`Grid`].
#[derive(Clone, Debug, PartialEq)]
pub struct SampledSignal {
    grid: Grid,
    values: Vec<Complex64>,
    boundary_decay: f64,
}

impl SampledSignal {
    pub fn new(grid: Grid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                got: values.len(),
            });
        }
        let boundary_decay = boundary_decay(&values);
        Ok(Self {
            grid,
            values,
            boundary_decay,
        })
    }

    pub fn from_real(grid: Grid, values: &[f64]) -> Result<Self> {
        Self::new(grid, values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn zeros(grid: Grid) -> Self {
        Self {
            grid,
            values: alloc::vec![Complex64::new(0.0, 0.0); grid.len()],
            boundary_decay: 0.0,
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Largest modulus over the outer 5% of samples at either end.
    pub fn boundary_decay(&self) -> f64 {
        self.boundary_decay
    }

    pub fn max_abs(&self) -> f64 {
        crate::math::max_abs(&self.values)
    }

    /// Pointwise map keeping the grid.
    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Self {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(j, &v)| f(self.grid.x(j), v))
            .collect();
        Self::rebuilt(self.grid, values)
    }

    /// Pointwise combination with a signal on the same grid.
    pub fn zip_with(
        &self,
        other: &SampledSignal,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Self> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(Self::rebuilt(self.grid, values))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|_, v| c * v)
    }

    /// Multiplication by the position coordinate.
    pub fn times_x(&self) -> Self {
        self.map(|x, v| v * x)
    }

    /// `sup |self − other|` over the central half of the grid.
    pub fn central_sup_distance(&self, other: &SampledSignal) -> Result<f64> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        Ok(self.grid.central_half().fold(0.0, |m, j| {
            m.max((self.values[j] - other.values[j]).norm())
        }))
    }

    /// `Σ conj(self_j)·other_j·dx`
    pub fn inner(&self, other: &SampledSignal) -> Result<Complex64> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        let s: Complex64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a.conj() * b)
            .sum();
        Ok(s * self.grid.dx())
    }

    /// `Σ self_j·other_j·dx`, no conjugation.
    pub fn bilinear(&self, other: &SampledSignal) -> Result<Complex64> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        let s: Complex64 = self.values.iter().zip(&other.values).map(|(a, b)| a * b).sum();
        Ok(s * self.grid.dx())
    }

    /// Discrete `L²` norm `√(Σ|v|²·dx)`.
    pub fn l2_norm(&self) -> f64 {
        libm::sqrt(self.values.iter().map(|v| v.norm_sqr()).sum::<f64>() * self.grid.dx())
    }

    pub(crate) fn rebuilt(grid: Grid, values: Vec<Complex64>) -> Self {
        debug_assert_eq!(values.len(), grid.len());
        let boundary_decay = boundary_decay(&values);
        Self {
            grid,
            values,
            boundary_decay,
        }
    }
}

fn boundary_decay(values: &[Complex64]) -> f64 {
    let n = values.len();
    let edge = (libm::ceil(BOUNDARY_FRACTION * n as f64) as usize).clamp(1, n);
    values[..edge]
        .iter()
        .chain(&values[n - edge..])
        .map(|v| v.norm())
        .fold(0.0, f64::max)
}

/// Samples `f` at every grid point.
pub fn sample(f: impl Fn(f64) -> Complex64, grid: Grid) -> Result<SampledSignal> {
    let mut values = Vec::with_capacity(grid.len());
    for x in grid.xs() {
        let v = f(x);
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::EvaluationFailure { x });
        }
        values.push(v);
    }
    Ok(SampledSignal::rebuilt(grid, values))
}

/// Samples a real function.
pub fn sample_real(f: impl Fn(f64) -> f64, grid: Grid) -> Result<SampledSignal> {
    sample(|x| Complex64::new(f(x), 0.0), grid)
}

/// Fourier coefficients in the `1/√(2π)` convention, indexed like
/// [`Grid::frequency`].
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    grid: Grid,
    coeffs: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(grid: Grid, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(Error::LengthMismatch {
                expected: grid.len(),
                got: coeffs.len(),
            });
        }
        Ok(Self { grid, coeffs })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Complex64> {
        self.coeffs
    }

    /// Discrete `L²` norm on the frequency side, `√(Σ|c|²·dp)`.
    pub fn l2_norm(&self) -> f64 {
        libm::sqrt(self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>() * self.grid.dp())
    }
}
