//! `D^α(fg)` as a double integral over the two spectra.

use alloc::vec::Vec;
use num_complex::Complex64;

use super::{AlphaPower, Transform};
use crate::error::{Error, Result};
use crate::grid::SampledSignal;
use crate::math::{cis_quarter, cis_turns, TAU};

/// Largest grid accepted by [`product_rule`].
pub const PRODUCT_RULE_MAX_N: usize = 512;

/// `D^α(fg)(x) = (i^α/2π) ∫∫ e^{i(s+q)x} ĝ(s) f̂(q) (s+q)^α dq ds` as a double
/// Riemann sum over the grid frequencies, with `(s+q)^α` on the `p^α` branch.
///
/// The sum is regrouped by `r = s + q`, which runs over `2n − 1` lattice
/// points without wrapping, so evaluating it costs `O(n²)`.
pub fn product_rule(f: &SampledSignal, g: &SampledSignal, alpha: f64) -> Result<SampledSignal> {
    let symbol = AlphaPower::p(alpha)?;
    if !f.grid().same_as(g.grid()) {
        return Err(Error::GridMismatch);
    }
    let grid = *f.grid();
    let n = grid.len();
    if n > PRODUCT_RULE_MAX_N {
        return Err(Error::GridTooLarge {
            n,
            max: PRODUCT_RULE_MAX_N,
        });
    }
    let transform = Transform::new(grid);
    let f_hat = transform.forward(f.values());
    let g_hat = transform.forward(g.values());

    // modes run over -n/2 .. n/2-1, so r = m_s + m_q over -n .. n-2
    let half = (n / 2) as i64;
    let offset = n as i64; // index = r + n
    let mut conv = alloc::vec![Complex64::new(0.0, 0.0); 2 * n - 1];
    for (ks, gs) in g_hat.iter().enumerate() {
        if *gs == Complex64::new(0.0, 0.0) {
            continue;
        }
        let ms = grid.mode(ks);
        for (kq, fq) in f_hat.iter().enumerate() {
            let r = ms + grid.mode(kq);
            conv[(r + offset) as usize] += gs * fq;
        }
    }
    let dp = grid.dp();
    let i_alpha = cis_quarter(alpha);
    // e^{i r dp x_j} = e^{2πi r x_min/L} · e^{2πi r j/n}; the first factor is folded in here
    let ratio = grid.x_min() / grid.length();
    let weighted: Vec<(i64, Complex64)> = conv
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let r = idx as i64 - offset;
            let w = i_alpha * symbol.eval(r as f64 * dp) * c;
            (r, w * cis_turns(r as f64 * ratio))
        })
        .filter(|(_, c)| *c != Complex64::new(0.0, 0.0))
        .collect();
    debug_assert!(weighted.iter().all(|(r, _)| *r >= -2 * half && *r <= 2 * half - 2));

    let roots: Vec<Complex64> = (0..n).map(|t| cis_turns(t as f64 / n as f64)).collect();
    let scale = dp * dp / TAU;
    let values = (0..n)
        .map(|j| {
            let s: Complex64 = weighted
                .iter()
                .map(|&(r, c)| c * roots[(r * j as i64).rem_euclid(n as i64) as usize])
                .sum();
            s * scale
        })
        .collect();
    Ok(SampledSignal::rebuilt(grid, values))
}
