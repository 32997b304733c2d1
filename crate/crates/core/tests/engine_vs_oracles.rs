use fracspec_core::grid::sample_real;
use fracspec_core::oracles::{gaussian_deriv, x2gaussian_deriv};
use fracspec_core::spectral::{fractional_derivative, fractional_momentum};
use fracspec_core::{Complex64, Grid, SampledSignal};
use proptest::prelude::*;

fn grid() -> Grid {
    Grid::new(-16.0, 16.0, 4096).unwrap()
}

fn central_error(d: &SampledSignal, want: impl Fn(f64) -> Complex64) -> f64 {
    let g = d.grid();
    g.central_half()
        .map(|j| (d.values()[j] - want(g.x(j))).norm())
        .fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gaussian_matches_closed_form(alpha in 0.0f64..6.0) {
        let s = sample_real(|x| (-x * x).exp(), grid()).unwrap();
        let d = fractional_derivative(&s, alpha).unwrap().signal;
        let err = central_error(&d, |x| gaussian_deriv(alpha, x).unwrap());
        prop_assert!(err < 1e-8, "alpha={} err={:e}", alpha, err);
    }

    #[test]
    fn x2gaussian_matches_closed_form(alpha in 0.0f64..4.0) {
        let s = sample_real(|x| x * x * (-x * x).exp(), grid()).unwrap();
        let d = fractional_derivative(&s, alpha).unwrap().signal;
        let err = central_error(&d, |x| x2gaussian_deriv(alpha, x).unwrap());
        prop_assert!(err < 1e-8, "alpha={} err={:e}", alpha, err);
    }

    #[test]
    fn derivative_is_linear(alpha in 0.0f64..3.0, a in -2.0f64..2.0, b in -2.0f64..2.0) {
        let g = grid();
        let u = sample_real(|x| (-x * x).exp(), g).unwrap();
        let v = sample_real(|x| x * x * (-x * x).exp(), g).unwrap();
        let mix = u.zip_with(&v, |p, q| a * p + b * q).unwrap();
        let lhs = fractional_derivative(&mix, alpha).unwrap().signal;
        let du = fractional_derivative(&u, alpha).unwrap().signal;
        let dv = fractional_derivative(&v, alpha).unwrap().signal;
        let rhs = du.zip_with(&dv, |p, q| a * p + b * q).unwrap();
        prop_assert!(lhs.central_sup_distance(&rhs).unwrap() < 1e-12);
    }
}

#[test]
fn momentum_is_phase_rotated_derivative() {
    // P_α = i^{−α} D^α
    let s = sample_real(|x| (-x * x).exp(), grid()).unwrap();
    for alpha in [0.5, 1.5, 2.5] {
        let p = fractional_momentum(&s, alpha).unwrap().signal;
        let d = fractional_derivative(&s, alpha).unwrap().signal;
        let phase = fracspec_core::math::cis_quarter(-alpha);
        let gap = p.zip_with(&d, |u, v| u - phase * v).unwrap().max_abs();
        assert!(gap < 1e-12, "alpha={alpha}: {gap:e}");
    }
}
