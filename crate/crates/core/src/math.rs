//! Small floating-point helpers on top of `libm`.

use num_complex::Complex64;

pub use core::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2, TAU};

/// `1/√(2π)`
pub const FRAC_1_SQRT_TAU: f64 = 0.398_942_280_401_432_7;

#[inline]
pub fn is_integer(x: f64) -> bool {
    x.is_finite() && libm::floor(x) == x
}

/// `e^{i·m·π/2}` for real `m`, exact whenever `m` is an integer.
///
/// Branch phases such as `i^α` and `(−1)^α = i^{2α}` go through this so that
/// integer orders produce exactly real or exactly imaginary factors.
pub fn cis_quarter(m: f64) -> Complex64 {
    let r = m - 4.0 * libm::floor(m / 4.0);
    if libm::floor(r) == r {
        return match r as u8 {
            0 | 4 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let theta = r * core::f64::consts::FRAC_PI_2;
    Complex64::new(libm::cos(theta), libm::sin(theta))
}

/// `e^{iθ}`
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::new(libm::cos(theta), libm::sin(theta))
}

/// `e^{2πi·t}` with `t` reduced to `[-1/2, 1/2]` first.
#[inline]
pub fn cis_turns(t: f64) -> Complex64 {
    cis(TAU * (t - libm::round(t)))
}

pub fn max_abs(values: &[Complex64]) -> f64 {
    values.iter().map(|v| v.norm()).fold(0.0, f64::max)
}

pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_exact() {
        assert_eq!(cis_quarter(0.0), Complex64::new(1.0, 0.0));
        assert_eq!(cis_quarter(1.0), Complex64::new(0.0, 1.0));
        assert_eq!(cis_quarter(-1.0), Complex64::new(0.0, -1.0));
        assert_eq!(cis_quarter(6.0), Complex64::new(-1.0, 0.0));
        assert_eq!(cis_quarter(-4.0), Complex64::new(1.0, 0.0));
        let h = cis_quarter(0.5);
        assert!((h.re - FRAC_1_SQRT_2).abs() < 3e-16 && (h.im - FRAC_1_SQRT_2).abs() < 3e-16);
        let g = cis_quarter(-2.5);
        let want = cis(-2.5 * PI / 2.0);
        assert!((g - want).norm() < 1e-15);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.0);
        assert_eq!(binomial(16, 8), 12870.0);
        assert_eq!(binomial(3, 4), 0.0);
    }
}
