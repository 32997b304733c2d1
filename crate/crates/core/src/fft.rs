//! In-place iterative radix-2 FFT.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::math::TAU;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Direction {
    /// `X_k = Σ_j x_j e^{−2πi jk/n}`
    Forward,
    /// `x_j = Σ_k X_k e^{+2πi jk/n}` (unnormalized)
    Inverse,
}

pub(crate) struct Radix2 {
    n: usize,
    log2n: u32,
    /// `e^{−2πi k/n}` for `k < n/2`
    twiddles: Vec<Complex64>,
}

impl Radix2 {
    pub(crate) fn new(n: usize) -> Self {
        assert!(n.is_power_of_two(), "radix-2 length must be a power of two");
        let half = n / 2;
        let mut twiddles = Vec::with_capacity(half);
        for k in 0..half {
            twiddles.push(unit_root(k, n));
        }
        Self {
            n,
            log2n: n.trailing_zeros(),
            twiddles,
        }
    }

    pub(crate) fn process(&self, buf: &mut [Complex64], dir: Direction) {
        assert_eq!(buf.len(), self.n);
        let n = self.n;
        if n <= 1 {
            return;
        }
        let shift = usize::BITS - self.log2n;
        for i in 0..n {
            let j = i.reverse_bits() >> shift;
            if j > i {
                buf.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            for start in (0..n).step_by(len) {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if dir == Direction::Inverse {
                        w = w.conj();
                    }
                    let a = buf[start + k];
                    let b = buf[start + k + half] * w;
                    buf[start + k] = a + b;
                    buf[start + k + half] = a - b;
                }
            }
            len <<= 1;
        }
    }
}

/// `e^{−2πi k/n}` for `0 ≤ k < n/2`, evaluated through octant symmetry.
fn unit_root(k: usize, n: usize) -> Complex64 {
    // angle = 2πk/n in [0, π); map to [0, π/4] where sin/cos are most accurate
    let eighth = n / 8;
    if n < 8 {
        let a = TAU * k as f64 / n as f64;
        return Complex64::new(libm::cos(a), -libm::sin(a));
    }
    let (c, s) = if k <= eighth {
        let a = TAU * k as f64 / n as f64;
        (libm::cos(a), libm::sin(a))
    } else if k <= 2 * eighth {
        let a = TAU * (2 * eighth - k) as f64 / n as f64;
        (libm::sin(a), libm::cos(a))
    } else if k <= 3 * eighth {
        let a = TAU * (k - 2 * eighth) as f64 / n as f64;
        (-libm::sin(a), libm::cos(a))
    } else {
        let a = TAU * (4 * eighth - k) as f64 / n as f64;
        (-libm::cos(a), libm::sin(a))
    };
    Complex64::new(c, -s)
}
