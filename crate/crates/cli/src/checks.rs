//! Check suites run by `fracspec check`: one line per assertion.

use std::fmt;
use std::num::NonZeroU32;

use fracspec_core::grid::sample_real;
use fracspec_core::math::PI;
use fracspec_core::oracles::{
    eigenstate_signal, exp_rule, gaussian_deriv, gaussian_hat, monomial_deriv, quadrature_reference,
    x2gaussian_deriv, x2gaussian_hat, EigenstateSpec, MonomialValue,
};
use fracspec_core::quantum::{
    commutator_dx, commutator_ladder, symmetry_residual, uncertainty_check, uncertainty_rhs,
    x_p_commutator, StateVector,
};
use fracspec_core::specfun::gamma;
use fracspec_core::spectral::{
    duality_residual, fractional_derivative, fractional_momentum, multiplier_sup_bound,
    theorem3_gap, MinusOneBranch, Pairing,
};
use fracspec_core::{Complex64, Error, Grid, SampledSignal};

use crate::args::Suite;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Reported without an assertion.
    Info,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckLine {
    pub suite: &'static str,
    pub name: String,
    pub measured: f64,
    pub tolerance: Option<f64>,
    pub outcome: Outcome,
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Info => "INFO",
        };
        write!(f, "{tag} {}: {} measured={:.3e}", self.suite, self.name, self.measured)?;
        if let Some(t) = self.tolerance {
            write!(f, " tol={t:.1e}")?;
        }
        Ok(())
    }
}

struct Log {
    suite: &'static str,
    lines: Vec<CheckLine>,
}

impl Log {
    fn below(&mut self, name: impl Into<String>, measured: f64, tol: f64) {
        self.push(name, measured, Some(tol), measured < tol);
    }

    fn holds(&mut self, name: impl Into<String>, measured: f64, ok: bool) {
        self.push(name, measured, None, ok);
    }

    fn info(&mut self, name: impl Into<String>, measured: f64) {
        self.lines.push(CheckLine {
            suite: self.suite,
            name: name.into(),
            measured,
            tolerance: None,
            outcome: Outcome::Info,
        });
    }

    fn push(&mut self, name: impl Into<String>, measured: f64, tolerance: Option<f64>, ok: bool) {
        self.lines.push(CheckLine {
            suite: self.suite,
            name: name.into(),
            measured,
            tolerance,
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        });
    }
}

/// Runs `suite` (every suite for [`Suite::All`]).
pub fn run_suite(suite: Suite) -> Vec<CheckLine> {
    if suite == Suite::All {
        return Suite::EACH.iter().flat_map(|&s| run_suite(s)).collect();
    }
    let mut log = Log {
        suite: suite.name(),
        lines: Vec::new(),
    };
    let result = match suite {
        Suite::Integer => integer(&mut log),
        Suite::Closedform => closed_form(&mut log),
        Suite::Commutator => commutator(&mut log),
        Suite::Uncertainty => uncertainty(&mut log),
        Suite::Convergence => convergence(&mut log),
        Suite::Duality => duality(&mut log),
        Suite::Eigenstate => eigenstate(&mut log),
        Suite::Parity => parity(&mut log),
        Suite::Monomial => monomial(&mut log),
        Suite::All => unreachable!(),
    };
    if let Err(e) = result {
        log.holds(format!("aborted: {e}"), f64::NAN, false);
    }
    log.lines
}

pub fn all_passed(lines: &[CheckLine]) -> bool {
    lines.iter().all(|l| l.outcome != Outcome::Fail)
}

type Checked = Result<(), Error>;

fn f1(g: Grid) -> Result<SampledSignal, Error> {
    sample_real(|x| (-x * x).exp(), g)
}

fn f2(g: Grid) -> Result<SampledSignal, Error> {
    sample_real(|x| x * x * (-x * x).exp(), g)
}

fn hermite(n: u32, x: f64) -> f64 {
    let e = (-x * x).exp();
    match n {
        0 => e,
        1 => -2.0 * x * e,
        2 => (4.0 * x * x - 2.0) * e,
        _ => (12.0 * x - 8.0 * x * x * x) * e,
    }
}

/// `sup |a − b|` over grid points with `|x| ≤ radius`.
fn window_sup(a: &SampledSignal, b: impl Fn(f64) -> Complex64, radius: f64) -> f64 {
    let g = a.grid();
    (0..g.len())
        .filter(|&j| g.x(j).abs() <= radius)
        .map(|j| (a.values()[j] - b(g.x(j))).norm())
        .fold(0.0, f64::max)
}

fn integer(log: &mut Log) -> Checked {
    let g = Grid::new(-16.0, 16.0, 4096)?;
    let s = f1(g)?;
    for n in 0..=3u32 {
        let d = fractional_derivative(&s, f64::from(n))?.signal;
        let err = window_sup(&d, |x| Complex64::new(hermite(n, x), 0.0), 4.0);
        log.below(format!("spectral D^{n} e^(-x^2) vs analytic, |x|<=4"), err, 1e-8);
    }
    for n in 0..=3u32 {
        let mut worst: f64 = 0.0;
        for i in -12..=12 {
            let x = f64::from(i) * 0.25;
            let want = hermite(n, x);
            let got = gaussian_deriv(f64::from(n), x)?;
            worst = worst.max((got - want).norm() / want.abs().max(1e-3));
        }
        log.below(format!("closed form D^{n} e^(-x^2) vs analytic (relative)"), worst, 1e-9);
    }
    Ok(())
}

fn closed_form(log: &mut Log) -> Checked {
    for alpha in [0.0, 0.02, 0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 4.5, 4.8, 5.0, 5.2, 5.5] {
        let mut worst: f64 = 0.0;
        for i in 0..25 {
            let x = -3.0 + 0.25 * f64::from(i);
            let q = quadrature_reference(gaussian_hat, alpha, x, 40.0)?;
            worst = worst.max((gaussian_deriv(alpha, x)? - q).norm());
        }
        log.below(format!("gaussian closed form vs quadrature, alpha={alpha}"), worst, 1e-8);
    }
    for alpha in [0.5, 1.5, 2.5] {
        let mut worst: f64 = 0.0;
        for i in 0..25 {
            let x = -3.0 + 0.25 * f64::from(i);
            let q = quadrature_reference(x2gaussian_hat, alpha, x, 40.0)?;
            worst = worst.max((x2gaussian_deriv(alpha, x)? - q).norm());
        }
        log.below(format!("x^2 gaussian closed form vs quadrature, alpha={alpha}"), worst, 1e-8);
    }

    let g = Grid::new(-32.0, 32.0, 1 << 15)?;
    let s = f1(g)?;
    for alpha in [0.02, 0.1, 0.5, 1.5, 2.5, 4.8, 5.2] {
        let d = fractional_derivative(&s, alpha)?.signal;
        let err = window_sup(&d, |x| gaussian_deriv(alpha, x).unwrap_or(Complex64::new(f64::NAN, 0.0)), 2.0);
        log.below(format!("spectral vs closed form, alpha={alpha}, |x|<=2"), err, 1e-3);
    }

    let exact = gamma(0.75)? / PI.sqrt();
    let closed = gaussian_deriv(0.5, 0.0)?;
    let quad = quadrature_reference(gaussian_hat, 0.5, 0.0, 40.0)?;
    log.below("D^(1/2) e^(-x^2) at 0, closed form", (closed - exact).norm(), 1e-6);
    log.below("D^(1/2) e^(-x^2) at 0, quadrature", (quad - exact).norm(), 1e-6);

    let e = exp_rule(2.0, 0.5, 0.0)?;
    log.below("exponential rule k=2 alpha=1/2 at 0", (e - 2f64.sqrt()).abs(), 1e-12);
    let e = exp_rule(3.0, 2.0, 1.0)?;
    log.below("exponential rule k=3 alpha=2 at 1", (e - 9.0 * 3f64.exp()).abs(), 1e-12);
    log.holds("exponential rule rejects k <= 0", 0.0, exp_rule(-1.0, 1.0, 0.0).is_err());
    Ok(())
}

fn commutator(log: &mut Log) -> Checked {
    let g = Grid::new(-20.0, 20.0, 8192)?;
    for (name, f) in [("f1", f1(g)?), ("f2", f2(g)?)] {
        for alpha in [0.0, 1.0, 1.5, 2.0, 2.5, 3.0] {
            let gap = commutator_dx(&f, alpha)?.gap;
            log.below(format!("[D^a, x] {name} = a D^(a-1) {name}, a={alpha}"), gap, 1e-6);
        }
    }
    let rejected = matches!(commutator_dx(&f1(g)?, 0.5), Err(Error::AlphaInForbiddenRange(_)));
    log.holds("[D^a, x] rejects a=0.5", 0.5, rejected);

    let one = commutator_ladder(&f1(g)?, 1.0)?;
    log.below("[A_1, B_1] f1 = f1", one.gap, 1e-8);
    let three = commutator_ladder(&f2(g)?, 3.0)?;
    log.below("[A_3, B_3] f2 = 3 P_2 f2", three.gap, 1e-6);

    let g = Grid::new(-16.0, 16.0, 2048)?;
    let f = f2(g)?;
    for alpha in [1.0, 1.5, 2.5, 3.0] {
        let ladder = commutator_ladder(&f, alpha)?.lhs;
        let direct = x_p_commutator(&f, alpha)?.scale(Complex64::new(0.0, -1.0));
        let gap = ladder.central_sup_distance(&direct)?;
        log.below(format!("[A_a, B_a] = -i[x, P_a], a={alpha}"), gap, 1e-9);
    }
    Ok(())
}

fn uncertainty(log: &mut Log) -> Checked {
    log.below("closed-form bound at alpha=1 is 1/2", (uncertainty_rhs(1.0) - 0.5).abs(), 1e-12);
    log.below("closed-form bound at alpha=2 is 0", uncertainty_rhs(2.0).abs(), 1e-12);
    log.below("closed-form bound at alpha=3 is 3/2", (uncertainty_rhs(3.0) - 1.5).abs(), 1e-12);

    let g = Grid::new(-16.0, 16.0, 4096)?;
    let phi = StateVector::gaussian(g)?;
    for alpha in [1.0, 1.5, 2.0, 2.5, 3.0] {
        let r = uncertainty_check(alpha, &phi)?;
        let want = uncertainty_rhs(alpha);
        let rel = if want == 0.0 {
            r.rhs_bound
        } else {
            (r.rhs_bound - want).abs() / want
        };
        log.below(format!("numeric bound vs closed form, alpha={alpha}"), rel, 1e-6);
        log.holds(
            format!("dx dP >= bound, alpha={alpha}"),
            r.product - r.rhs_bound,
            r.satisfied,
        );
    }
    let r = uncertainty_check(1.0, &phi)?;
    log.below("Gaussian saturates dx dP_1 = 1/2", (r.product - 0.5).abs(), 1e-9);

    let mut spurious = 0usize;
    for i in 0..=600 {
        let a = f64::from(i) / 100.0;
        let zero = uncertainty_rhs(a).abs() < 1e-12;
        if zero != (i % 200 == 0) {
            spurious += 1;
        }
    }
    log.holds("bound vanishes exactly at alpha in {0,2,4,6}", spurious as f64, spurious == 0);
    Ok(())
}

fn convergence(log: &mut Log) -> Checked {
    let g = Grid::new(-16.0, 16.0, 4096)?;
    let s = f1(g)?;
    for n in [0u32, 5] {
        let gaps = [10u32, 100, 1000]
            .map(|k| theorem3_gap(&s, n, NonZeroU32::new(k).expect("nonzero")));
        let [g10, g100, g1000] = [gaps[0].clone()?, gaps[1].clone()?, gaps[2].clone()?];
        log.holds(
            format!("D^({n}+1/k) -> D^{n}: gaps decrease at k=10,100,1000"),
            g1000,
            g10 > g100 && g100 > g1000,
        );
        log.below(format!("D^({n}+1/k) -> D^{n}: gap(1000)/gap(10)"), g1000 / g10, 0.1);
    }

    let opts = fracspec_core::spectral::SpectralOptions::bare();
    let orders = [0.3, 0.7, 1.5];
    let mut worst: f64 = 0.0;
    for &a in &orders {
        for &b in &orders {
            let inner = fracspec_core::spectral::fractional_derivative_with(&s, b, &opts)?.signal;
            let twice = fracspec_core::spectral::fractional_derivative_with(&inner, a, &opts)?.signal;
            let once = fracspec_core::spectral::fractional_derivative_with(&s, a + b, &opts)?.signal;
            let dev = twice.zip_with(&once, |u, v| u - v)?.max_abs() / once.max_abs();
            worst = worst.max(dev);
        }
    }
    log.below("semigroup D^a D^b = D^(a+b) (relative)", worst, 1e-10);

    for alpha in [0.0, 0.5, 1.0, 2.5] {
        let d = fracspec_core::spectral::fractional_derivative_with(&s, alpha, &opts)?.signal;
        let bound = multiplier_sup_bound(&s, alpha)?;
        log.holds(
            format!("sup |D^a f| <= multiplier bound, a={alpha}"),
            d.max_abs() / bound,
            d.max_abs() <= bound * (1.0 + 1e-12),
        );
    }
    Ok(())
}

fn duality(log: &mut Log) -> Checked {
    let g = Grid::new(-16.0, 16.0, 1024)?;
    let (a, b) = (f1(g)?, f2(g)?);
    let settings = [
        (Pairing::Sesquilinear, MinusOneBranch::PlusIPi, "sesquilinear, e^(+i pi a)"),
        (Pairing::Sesquilinear, MinusOneBranch::MinusIPi, "sesquilinear, e^(-i pi a)"),
        (Pairing::Bilinear, MinusOneBranch::PlusIPi, "bilinear, e^(+i pi a)"),
        (Pairing::Bilinear, MinusOneBranch::MinusIPi, "bilinear, e^(-i pi a)"),
    ];
    for alpha in [1.0, 2.0, 3.0] {
        for (pairing, branch, label) in settings {
            let r = duality_residual(&a, &b, alpha, pairing, branch)?;
            log.below(format!("<D^a f1, f2> = (-1)^a <f1, D^a f2>, a={alpha}, {label}"), r.norm(), 1e-10);
        }
    }
    for (pairing, branch, label) in settings {
        let r = duality_residual(&a, &b, 0.5, pairing, branch)?;
        log.info(format!("duality residual a=0.5, {label}"), r.norm());
    }
    for alpha in [1.0, 2.0] {
        let r = symmetry_residual(&a, &b, alpha)?;
        log.below(format!("<P_a f2, f1> = <f2, P_a f1>, a={alpha}"), r.norm(), 1e-10);
    }
    log.info("symmetry residual a=0.5", symmetry_residual(&a, &b, 0.5)?.norm());
    Ok(())
}

fn eigenstate(log: &mut Log) -> Checked {
    let g = Grid::new(-4.0 * PI, 4.0 * PI, 256)?;
    let cases = [
        (1.0, 2.0, "plane wave q=2"),
        (2.0, 4.0, "cos(2x)/2"),
        (1.0 / 3.0, 1.0, "plane wave q=1"),
        (0.2, 2f64.powf(0.2), "plane wave q=2"),
    ];
    for (alpha, e, label) in cases {
        let f = eigenstate_signal(&EigenstateSpec::new(alpha, e), g)?;
        let pf = fractional_momentum(&f, alpha)?.signal;
        let rel = pf.zip_with(&f, |u, v| u - e * v)?.max_abs() / f.max_abs();
        log.below(format!("P_a f = E f, a={alpha:.4}, {label}"), rel, 1e-10);
    }
    Ok(())
}

fn parity(log: &mut Log) -> Checked {
    let g = Grid::new(-16.0, 16.0, 4096)?;
    let s = f1(g)?;
    for alpha in [0.0, 0.02, 0.1, 0.5, 2.0] {
        let d = fractional_derivative(&s, alpha)?.signal;
        let n = g.len();
        let asym = (1..n)
            .map(|j| (d.values()[j] - d.values()[n - j]).norm())
            .fold(0.0, f64::max);
        if alpha == 0.0 || alpha == 2.0 {
            log.below(format!("D^a e^(-x^2) stays even, a={alpha}"), asym, 1e-8);
        } else {
            log.holds(format!("D^a e^(-x^2) loses parity, a={alpha} (> 1e-3)"), asym, asym > 1e-3);
        }
    }
    Ok(())
}

fn monomial(log: &mut Log) -> Checked {
    use MonomialValue::{Undefined, Value};
    let table = [
        (0, 0.0, 2.0, Value(1.0)),
        (0, 0.5, 2.0, Value(0.0)),
        (0, 3.0, 2.0, Value(0.0)),
        (1, 0.0, 2.0, Value(2.0)),
        (1, 1.0, 2.0, Value(1.0)),
        (1, 1.5, 2.0, Value(0.0)),
        (1, 0.5, 2.0, Undefined),
        (2, 0.0, 3.0, Value(9.0)),
        (2, 1.0, 3.0, Value(6.0)),
        (2, 2.0, 3.0, Value(2.0)),
        (2, 2.5, 3.0, Value(0.0)),
        (2, 0.5, 3.0, Undefined),
        (2, 1.5, 3.0, Undefined),
        (3, 2.0, 2.0, Value(12.0)),
        (3, 2.5, 2.0, Undefined),
    ];
    for (n, alpha, x, want) in table {
        let got = monomial_deriv(n, alpha, x);
        log.holds(
            format!("D^{alpha} x^{n} at x={x} is {want:?}"),
            got.value().unwrap_or(f64::NAN),
            got == want,
        );
    }
    Ok(())
}
