//! Globally adaptive 15-point Gauss–Kronrod quadrature for complex integrands.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use num_complex::Complex64;

use crate::error::{Error, Result};

// QUADPACK qk15 abscissae and weights
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7]
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

pub const MAX_DEPTH: u32 = 64;
const MAX_PANELS: usize = 200_000;

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn kronrod(f: &impl Fn(f64) -> Complex64, a: f64, b: f64, depth: u32) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for i in 0..7 {
        let dx = h * XGK[i];
        let pair = f(c - dx) + f(c + dx);
        k += pair * WGK[i];
        if i % 2 == 1 {
            g += pair * WG[i / 2];
        }
    }
    Panel {
        a,
        b,
        value: k * h,
        err: ((k - g) * h).norm(),
        depth,
    }
}

/// Integrates `f` over the union of `[a_i, b_i]` panels until the summed
/// Kronrod–Gauss discrepancy is below `tol`.
pub(crate) fn integrate(
    f: impl Fn(f64) -> Complex64,
    panels: &[(f64, f64)],
    tol: f64,
) -> Result<Complex64> {
    let mut heap: BinaryHeap<Panel> = panels.iter().map(|&(a, b)| kronrod(&f, a, b, 0)).collect();
    let mut settled: Vec<Panel> = Vec::new();
    loop {
        let total: f64 = heap.iter().chain(&settled).map(|p| p.err).sum();
        if total <= tol {
            break;
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => {
                return Err(Error::ToleranceNotReached {
                    estimate: total,
                    tolerance: tol,
                })
            }
        };
        if heap.len() + settled.len() > MAX_PANELS {
            return Err(Error::ToleranceNotReached {
                estimate: total,
                tolerance: tol,
            });
        }
        if worst.depth >= MAX_DEPTH {
            settled.push(worst);
            let stuck: f64 = settled.iter().map(|p| p.err).sum();
            if stuck > tol {
                return Err(Error::ToleranceNotReached {
                    estimate: total,
                    tolerance: tol,
                });
            }
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        heap.push(kronrod(&f, worst.a, mid, worst.depth + 1));
        heap.push(kronrod(&f, mid, worst.b, worst.depth + 1));
    }
    Ok(heap.iter().chain(&settled).map(|p| p.value).sum())
}

/// Splits `[a, b]` into equal panels no wider than `width`.
pub(crate) fn panels(a: f64, b: f64, width: f64) -> Vec<(f64, f64)> {
    let count = libm::ceil((b - a) / width).max(1.0) as usize;
    let step = (b - a) / count as f64;
    (0..count)
        .map(|i| {
            let lo = a + i as f64 * step;
            let hi = if i + 1 == count { b } else { lo + step };
            (lo, hi)
        })
        .collect()
}
