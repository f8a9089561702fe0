//! Shape-preserving piecewise cubic Hermite interpolation.
//!
//! Slopes follow the Fritsch-Carlson scheme with the weighted harmonic
//! mean for interior points and the one-sided three-point formula at the
//! ends, i.e. the same construction Matlab's `pchip` and SciPy's
//! `PchipInterpolator` use. Monotone data yields a monotone interpolant
//! on every interval.

use alloc::vec;
use alloc::vec::Vec;

use crate::math;

/// Derivatives of the PCHIP interpolant at the knots. `x` must be
/// strictly increasing with `x.len() == y.len() >= 2`.
pub(crate) fn slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    debug_assert!(n >= 2);
    debug_assert_eq!(n, y.len());

    let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();

    let mut d = vec![0.0; n];
    if n == 2 {
        d[0] = delta[0];
        d[1] = delta[0];
        return d;
    }

    for i in 1..n - 1 {
        let (d0, d1) = (delta[i - 1], delta[i]);
        if d0 == 0.0 || d1 == 0.0 || (d0 > 0.0) != (d1 > 0.0) {
            d[i] = 0.0;
        } else {
            let w1 = 2.0 * h[i] + h[i - 1];
            let w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / d0 + w2 / d1);
        }
    }

    d[0] = edge_slope(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = edge_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    d
}

/// Non-centered three-point end slope, clamped to preserve shape.
fn edge_slope(h0: f64, h1: f64, del0: f64, del1: f64) -> f64 {
    let mut d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
    if d.signum() != del0.signum() {
        d = 0.0;
    } else if del0.signum() != del1.signum() && math::fabs(d) > 3.0 * math::fabs(del0) {
        d = 3.0 * del0;
    }
    d
}

/// Evaluates the interpolant at `xq`. Queries outside `[x[0], x[n-1]]`
/// extrapolate with the boundary cubic.
pub(crate) fn eval(x: &[f64], y: &[f64], d: &[f64], xq: f64) -> f64 {
    let n = x.len();
    debug_assert!(n >= 2);

    // Segment index, clamped so out-of-range queries reuse the edge cubic.
    let i = match x.binary_search_by(|v| v.partial_cmp(&xq).unwrap()) {
        Ok(idx) => return y[idx],
        Err(ins) => ins.saturating_sub(1).min(n - 2),
    };

    let h = x[i + 1] - x[i];
    let t = (xq - x[i]) / h;
    let t2 = t * t;
    let t3 = t2 * t;

    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;

    h00 * y[i] + h10 * h * d[i] + h01 * y[i + 1] + h11 * h * d[i + 1]
}
