use super::*;
use crate::grid::{sample_real, Grid};
use crate::spectral::{fractional_derivative, fractional_momentum};
use std::vec::Vec;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn gaussian_examples() {
    for x in [0.0f64, 1.0, 2.0] {
        let v = gaussian_deriv(0.0, x).unwrap();
        let want = libm::exp(-x * x);
        assert!((v.re - want).abs() < 1e-10 * want && v.im == 0.0);
    }
    assert!(close(gaussian_deriv(2.0, 1.0).unwrap().re, 2.0 * libm::exp(-1.0), 1e-12));
    assert!(close(gaussian_deriv(2.0, 1.0).unwrap().re, 0.7357589, 1e-7));
    let h = gaussian_deriv(0.5, 0.0).unwrap();
    assert!(close(h.re, 1.2254167024651776 / libm::sqrt(PI), 1e-12));
    assert!(close(h.re, 0.6913605, 1e-5));
}

#[test]
fn gaussian_integer_collapse() {
    let hermite: [fn(f64) -> f64; 4] = [
        |x| libm::exp(-x * x),
        |x| -2.0 * x * libm::exp(-x * x),
        |x| (4.0 * x * x - 2.0) * libm::exp(-x * x),
        |x| (12.0 * x - 8.0 * x * x * x) * libm::exp(-x * x),
    ];
    for (n, h) in hermite.iter().enumerate() {
        for i in -12..=12 {
            let x = 0.25 * f64::from(i);
            let v = gaussian_deriv(n as f64, x).unwrap();
            let want = h(x);
            assert!((v.re - want).abs() <= 1e-9 * want.abs().max(1e-3), "n={n} x={x}");
            assert!(v.im.abs() < 1e-12);
        }
    }
}

#[test]
fn gaussian_matches_quadrature() {
    for alpha in [0.0, 0.02, 0.1, 0.5, 1.0, 2.0, 4.5, 5.0, 5.5] {
        for i in 0..25 {
            let x = -3.0 + 0.25 * f64::from(i);
            let closed = gaussian_deriv(alpha, x).unwrap();
            let quad = quadrature_reference(gaussian_hat, alpha, x, 40.0).unwrap();
            assert!((closed - quad).norm() < 1e-8, "alpha={alpha} x={x}: {closed} vs {quad}");
        }
    }
}

#[test]
fn quadrature_examples() {
    let v = quadrature_reference(gaussian_hat, 0.0, 1.0, 40.0).unwrap();
    assert!((v.re - libm::exp(-1.0)).abs() < 1e-10 && v.im.abs() < 1e-10);
    let h = quadrature_reference(gaussian_hat, 0.5, 0.0, 40.0).unwrap();
    assert!((h - gaussian_deriv(0.5, 0.0).unwrap()).norm() < 1e-9);
    let d = quadrature_reference(gaussian_hat, 1.0, 0.5, 40.0).unwrap();
    assert!((d.re + libm::exp(-0.25)).abs() < 1e-10);
    assert!(close(d.re, -0.7788008, 1e-7));
}

#[test]
fn x2gaussian_examples() {
    for x in [0.5f64, 1.0] {
        let want = x * x * libm::exp(-x * x);
        let v = x2gaussian_deriv(0.0, x).unwrap();
        assert!((v.re - want).abs() < 1e-9 * want);
    }
    assert!(x2gaussian_deriv(1.0, 1.0).unwrap().norm() < 1e-12);
    for i in -8..=8 {
        let x = 0.375 * f64::from(i);
        let e = libm::exp(-x * x);
        let d2 = (2.0 - 10.0 * x * x + 4.0 * x.powi(4)) * e;
        let d3 = (-24.0 * x + 36.0 * x.powi(3) - 8.0 * x.powi(5)) * e;
        assert!(close(x2gaussian_deriv(2.0, x).unwrap().re, d2, 1e-9));
        assert!(close(x2gaussian_deriv(3.0, x).unwrap().re, d3, 1e-9));
    }
}

#[test]
fn x2gaussian_matches_quadrature() {
    for alpha in [0.3, 0.5, 1.7, 2.5] {
        for x in [-2.0, -0.5, 0.0, 1.0, 2.5] {
            let closed = x2gaussian_deriv(alpha, x).unwrap();
            let quad = quadrature_reference(x2gaussian_hat, alpha, x, 40.0).unwrap();
            assert!((closed - quad).norm() < 1e-8, "alpha={alpha} x={x}");
        }
    }
}

#[test]
fn x2gaussian_matches_engine() {
    let g = Grid::new(-16.0, 16.0, 4096).unwrap();
    let f2 = sample_real(|x| x * x * libm::exp(-x * x), g).unwrap();
    let d = fractional_derivative(&f2, 0.5).unwrap().signal;
    // x = 1 is sample 2048 + 128
    assert_eq!(g.x(2176), 1.0);
    let want = x2gaussian_deriv(0.5, 1.0).unwrap();
    assert!((d.values()[2176] - want).norm() < 1e-3);
}

#[test]
#[allow(clippy::approx_constant)]
fn exponential_rule() {
    assert_eq!(exp_rule(1.0, 0.5, 0.0).unwrap(), 1.0);
    assert!(close(exp_rule(2.0, 0.5, 0.0).unwrap(), 1.4142136, 1e-7));
    assert!(close(exp_rule(3.0, 2.0, 1.0).unwrap(), 9.0 * libm::exp(3.0), 1e-12));
    assert!(close(exp_rule(3.0, 2.0, 1.0 / 3.0).unwrap(), 24.4645, 1e-4));
    assert_eq!(exp_rule(0.0, 1.0, 0.0), Err(Error::NonPositiveK(0.0)));
    assert_eq!(exp_rule(-1.0, 1.0, 0.0), Err(Error::NonPositiveK(-1.0)));
}

#[test]
fn monomial_table() {
    use MonomialValue::{Undefined, Value};
    assert_eq!(monomial_deriv(1, 1.0, 17.0), Value(1.0));
    assert_eq!(monomial_deriv(2, 1.0, 3.0), Value(6.0));
    assert_eq!(monomial_deriv(1, 0.5, 0.0), Undefined);
    assert_eq!(monomial_deriv(0, 0.0, 5.0), Value(1.0));
    assert_eq!(monomial_deriv(0, 0.3, 5.0), Value(0.0));
    assert_eq!(monomial_deriv(1, 0.0, 5.0), Value(5.0));
    assert_eq!(monomial_deriv(1, 1.5, 5.0), Value(0.0));
    assert_eq!(monomial_deriv(2, 0.0, 3.0), Value(9.0));
    assert_eq!(monomial_deriv(2, 2.0, 3.0), Value(2.0));
    assert_eq!(monomial_deriv(2, 2.5, 3.0), Value(0.0));
    assert_eq!(monomial_deriv(2, 1.5, 3.0), Undefined);
    assert_eq!(monomial_deriv(2, 0.5, 3.0), Undefined);
    assert_eq!(monomial_deriv(4, 2.0, 2.0), Value(48.0));
    assert_eq!(monomial_deriv(3, 3.0, 2.0), Value(6.0));
    assert_eq!(monomial_deriv(3, -1.0, 2.0), Undefined);
}

#[test]
fn closed_form_families() {
    let g = ClosedForm::new(Family::Gaussian).unwrap();
    assert_eq!(g.admissible_alpha(), AdmissibleAlpha::AllNonNegative);
    assert!(g.admissible_alpha().contains(0.7));
    assert_eq!(g.value(1.0), libm::exp(-1.0));

    let m = ClosedForm::new(Family::Monomial { n: 2 }).unwrap();
    let adm = m.admissible_alpha();
    assert!(adm.contains(0.0) && adm.contains(2.0) && adm.contains(3.5));
    assert!(!adm.contains(1.5));
    assert_eq!(m.derivative(1.5, 2.0).unwrap(), None);
    assert_eq!(m.derivative(1.0, 2.0).unwrap(), Some(Complex64::new(4.0, 0.0)));

    let e = ClosedForm::new(Family::Exponential { k: 2.0 }).unwrap();
    assert_eq!(e.value(0.5), libm::exp(1.0));
    assert_eq!(
        ClosedForm::new(Family::Exponential { k: -2.0 }),
        Err(Error::NonPositiveK(-2.0))
    );
}

#[test]
fn gamma_three_quarters_by_quadrature() {
    // Γ(3/4) = ∫₀^∞ 4u² e^{−u⁴} du after t = u⁴
    let f = |u: f64| Complex64::new(4.0 * u * u * libm::exp(-u.powi(4)), 0.0);
    let v = quadrature::integrate(f, &quadrature::panels(0.0, 8.0, 0.5), 1e-13).unwrap();
    assert!((v.re - crate::specfun::gamma(0.75).unwrap()).abs() < 1e-12);
}

fn eigen_check(spec: EigenstateSpec, grid: Grid) -> f64 {
    let f = eigenstate_signal(&spec, grid).unwrap();
    let pf = fractional_momentum(&f, spec.alpha).unwrap().signal;
    let e = spec.eigenvalue;
    pf.zip_with(&f, |a, b| a - e * b).unwrap().max_abs() / f.max_abs()
}

#[test]
fn eigenstate_examples() {
    let g = Grid::new(-8.0, 8.0, 256).unwrap();
    let q = PI / 4.0;
    let s = eigenstate_signal(&EigenstateSpec::new(1.0, q), g).unwrap();
    for (j, v) in s.values().iter().enumerate() {
        assert!((v - crate::math::cis(q * g.x(j))).norm() < 1e-13);
    }
    assert!(eigen_check(EigenstateSpec::new(1.0, q), g) < 1e-10);
    assert!(eigen_check(EigenstateSpec::new(1.0, -q), g) < 1e-10);

    let g = Grid::new(-4.0 * PI, 4.0 * PI, 256).unwrap();
    let c = eigenstate_signal(&EigenstateSpec::new(2.0, 4.0), g).unwrap();
    for (j, v) in c.values().iter().enumerate() {
        assert!((v.re - libm::cos(2.0 * g.x(j)) / 2.0).abs() < 1e-13 && v.im == 0.0);
    }
    assert!(eigen_check(EigenstateSpec::new(2.0, 4.0), g) < 1e-10);

    let third = EigenstateSpec::new(1.0 / 3.0, 1.0);
    let w = eigenstate_signal(&third, g).unwrap();
    for (j, v) in w.values().iter().enumerate() {
        assert!((v - crate::math::cis(g.x(j))).norm() < 1e-13);
    }
    assert!(eigen_check(third, g) < 1e-10);
    // E = 2^{1/5} for α = 1/5 puts q = 2 on the grid
    let fifth = EigenstateSpec::new(0.2, libm::pow(2.0, 0.2));
    assert!((fifth.frequency().unwrap() - 2.0).abs() < 1e-14);
    assert!(eigen_check(fifth, g) < 1e-10);
}

#[test]
fn eigenstate_errors() {
    let g = Grid::new(-8.0, 8.0, 256).unwrap();
    assert!(matches!(
        eigenstate_signal(&EigenstateSpec::new(1.0, 1.0), g),
        Err(Error::FrequencyOffGrid { .. })
    ));
    // beyond the Nyquist mode
    assert!(matches!(
        eigenstate_signal(&EigenstateSpec::new(1.0, 200.0 * PI / 8.0), g),
        Err(Error::FrequencyOffGrid { .. })
    ));
    let unsupported: Vec<(f64, f64)> = std::vec![(2.0, -1.0), (0.5, 1.0), (1.0 / 3.0, -1.0), (1.5, 2.0)];
    for (alpha, e) in unsupported {
        assert!(matches!(
            EigenstateSpec::new(alpha, e).frequency(),
            Err(Error::UnsupportedEigenstate { .. })
        ));
    }
}
