//! Scalar root finding and adaptive quadrature shared by the distribution code.

use crate::error::{Error, Result};

/// Absolute tolerance used by [`adaptive_simpson`] callers in this crate.
pub const QUAD_TOLERANCE: f64 = 1e-10;
/// Maximum recursion depth of the adaptive Simpson rule.
pub const QUAD_MAX_DEPTH: u32 = 60;
/// Absolute tolerance on `x` for bisection.
pub const BISECTION_TOLERANCE: f64 = 1e-12;

/// Smallest `x` in `[lo, hi]` with `f(x) >= target`, for non-decreasing `f`.
///
/// Returns `lo` when `f(lo) >= target` and `hi` when no point in the interval
/// reaches the target.
pub fn bisect_lower<F>(f: F, target: f64, mut lo: f64, mut hi: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    if f(lo) >= target {
        return lo;
    }
    if f(hi) < target {
        return hi;
    }
    // f(lo) < target <= f(hi)
    while hi - lo > BISECTION_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) >= target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[derive(Debug, Clone, Copy)]
pub struct SimpsonConfig {
    pub tolerance: f64,
    pub max_depth: u32,
}

impl Default for SimpsonConfig {
    fn default() -> Self {
        Self {
            tolerance: QUAD_TOLERANCE,
            max_depth: QUAD_MAX_DEPTH,
        }
    }
}

/// Adaptive Simpson integration of `f` over `[a, b]`.
///
/// The error budget is split evenly between the two halves at every level.
/// Fails with [`Error::QuadratureNonConvergence`] if any branch reaches
/// `max_depth` without meeting its share of the tolerance.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, cfg: SimpsonConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if a == b {
        return Ok(0.0);
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    let mut exhausted = false;
    let value = simpson_step(
        &f,
        Interval {
            a,
            fa,
            m,
            fm,
            b,
            fb,
        },
        whole,
        cfg.tolerance,
        0,
        cfg.max_depth,
        &mut exhausted,
    );
    if exhausted {
        Err(Error::QuadratureNonConvergence {
            tolerance: cfg.tolerance,
            max_depth: cfg.max_depth,
        })
    } else {
        Ok(value)
    }
}

#[derive(Clone, Copy)]
struct Interval {
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
}

fn simpson_step<F>(
    f: &F,
    iv: Interval,
    whole: f64,
    tol: f64,
    depth: u32,
    max_depth: u32,
    exhausted: &mut bool,
) -> f64
where
    F: Fn(f64) -> f64,
{
    let lm = 0.5 * (iv.a + iv.m);
    let rm = 0.5 * (iv.m + iv.b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (iv.m - iv.a) / 6.0 * (iv.fa + 4.0 * flm + iv.fm);
    let right = (iv.b - iv.m) / 6.0 * (iv.fm + 4.0 * frm + iv.fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    if depth >= max_depth {
        *exhausted = true;
        return left + right + delta / 15.0;
    }
    let half = 0.5 * tol;
    let l = Interval {
        a: iv.a,
        fa: iv.fa,
        m: lm,
        fm: flm,
        b: iv.m,
        fb: iv.fm,
    };
    let r = Interval {
        a: iv.m,
        fa: iv.fm,
        m: rm,
        fm: frm,
        b: iv.b,
        fb: iv.fb,
    };
    simpson_step(f, l, left, half, depth + 1, max_depth, exhausted)
        + simpson_step(f, r, right, half, depth + 1, max_depth, exhausted)
}
