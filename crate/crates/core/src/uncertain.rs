//! Single-fold uncertainty distributions.
//!
//! An uncertainty distribution `Φ(x) = M{ξ ≤ x}` is a non-decreasing map from
//! the real line to `[0, 1]`. This module provides the three native families
//! used for coefficients (linear, triangular, trapezoidal), a generic
//! piecewise carrier that also represents every reduced two-fold
//! distribution, and the critical values (optimistic, pessimistic, expected)
//! computed from them.

use crate::error::{check_open_unit, Error, Result};
use crate::numeric::{adaptive_simpson, bisect_lower, SimpsonConfig};

/// Common interface of every single-fold uncertainty distribution.
pub trait UncertaintyDistribution {
    /// `Φ(x)`; zero below the support, one above it.
    fn cdf(&self, x: f64) -> f64;

    /// Closed support `[lo, hi]` outside of which `Φ` is 0 or 1.
    fn support(&self) -> (f64, f64);

    /// `inf{x : Φ(x) >= alpha}` for `alpha` in the open unit interval.
    fn inverse(&self, alpha: f64) -> Result<f64>;

    /// Optimistic value `ξ_sup(α) = Φ⁻¹(1 − α)`.
    fn optimistic(&self, alpha: f64) -> Result<f64> {
        let alpha = check_open_unit(alpha)?;
        self.inverse(1.0 - alpha)
    }

    /// Pessimistic value `ξ_inf(α) = Φ⁻¹(α)`.
    fn pessimistic(&self, alpha: f64) -> Result<f64> {
        self.inverse(check_open_unit(alpha)?)
    }

    /// Expected value `∫₀¹ Φ⁻¹(γ) dγ`.
    fn expected(&self) -> Result<f64>;
}

/// Which critical value to compute.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriticalValueQuery {
    Optimistic(f64),
    Pessimistic(f64),
    Expected,
}

impl CriticalValueQuery {
    pub fn optimistic(alpha: f64) -> Result<Self> {
        Ok(Self::Optimistic(check_open_unit(alpha)?))
    }

    pub fn pessimistic(alpha: f64) -> Result<Self> {
        Ok(Self::Pessimistic(check_open_unit(alpha)?))
    }
}

pub fn critical_value<U>(ud: &U, query: CriticalValueQuery) -> Result<f64>
where
    U: UncertaintyDistribution + ?Sized,
{
    match query {
        CriticalValueQuery::Optimistic(alpha) => ud.optimistic(alpha),
        CriticalValueQuery::Pessimistic(alpha) => ud.pessimistic(alpha),
        CriticalValueQuery::Expected => ud.expected(),
    }
}

fn check_increasing(params: &[f64], name: &str) -> Result<()> {
    if params.iter().any(|p| !p.is_finite()) {
        return Err(Error::invalid(format!(
            "{name} parameters must be finite: {params:?}"
        )));
    }
    if params.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid(format!(
            "{name} parameters must be strictly increasing: {params:?}"
        )));
    }
    Ok(())
}

/// Linear distribution `L(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearUd {
    a: f64,
    b: f64,
}

impl LinearUd {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        check_increasing(&[a, b], "linear")?;
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn to_piecewise(&self) -> PiecewiseUd {
        let slope = 1.0 / (self.b - self.a);
        PiecewiseUd::new(
            vec![self.a, self.b],
            vec![Segment::Affine {
                intercept: -self.a * slope,
                slope,
            }],
        )
        .expect("linear parameters already validated")
    }
}

impl UncertaintyDistribution for LinearUd {
    fn cdf(&self, x: f64) -> f64 {
        if x <= self.a {
            0.0
        } else if x >= self.b {
            1.0
        } else {
            (x - self.a) / (self.b - self.a)
        }
    }

    fn support(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    fn inverse(&self, alpha: f64) -> Result<f64> {
        let alpha = check_open_unit(alpha)?;
        Ok((1.0 - alpha) * self.a + alpha * self.b)
    }

    fn optimistic(&self, alpha: f64) -> Result<f64> {
        let alpha = check_open_unit(alpha)?;
        Ok(alpha * self.a + (1.0 - alpha) * self.b)
    }

    fn expected(&self) -> Result<f64> {
        Ok(0.5 * (self.a + self.b))
    }
}

/// Triangular distribution `TRI(a, b, c)`: quadratic ramps meeting at `b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularUd {
    a: f64,
    b: f64,
    c: f64,
}

impl TriangularUd {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        check_increasing(&[a, b, c], "triangular")?;
        Ok(Self { a, b, c })
    }

    pub fn params(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// `Φ(b) = (b − a)/(c − a)`.
    pub fn knot_value(&self) -> f64 {
        (self.b - self.a) / (self.c - self.a)
    }

    pub fn to_piecewise(&self) -> PiecewiseUd {
        let (a, b, c) = (self.a, self.b, self.c);
        PiecewiseUd::new(
            vec![a, b, c],
            vec![
                Segment::Quadratic {
                    offset: 0.0,
                    curvature: 1.0 / ((b - a) * (c - a)),
                    center: a,
                },
                Segment::Quadratic {
                    offset: 1.0,
                    curvature: -1.0 / ((c - a) * (c - b)),
                    center: c,
                },
            ],
        )
        .expect("triangular parameters already validated")
    }
}

impl UncertaintyDistribution for TriangularUd {
    fn cdf(&self, x: f64) -> f64 {
        let (a, b, c) = (self.a, self.b, self.c);
        if x <= a {
            0.0
        } else if x <= b {
            (x - a).powi(2) / ((b - a) * (c - a))
        } else if x < c {
            1.0 - (c - x).powi(2) / ((c - a) * (c - b))
        } else {
            1.0
        }
    }

    fn support(&self) -> (f64, f64) {
        (self.a, self.c)
    }

    fn inverse(&self, alpha: f64) -> Result<f64> {
        let alpha = check_open_unit(alpha)?;
        let (a, b, c) = (self.a, self.b, self.c);
        if alpha <= self.knot_value() {
            Ok(a + (alpha * (b - a) * (c - a)).sqrt())
        } else {
            Ok(c - ((1.0 - alpha) * (c - a) * (c - b)).sqrt())
        }
    }

    fn optimistic(&self, alpha: f64) -> Result<f64> {
        let alpha = check_open_unit(alpha)?;
        let (a, b, c) = (self.a, self.b, self.c);
        // branch thresholds are on 1 − α
        if 1.0 - alpha <= self.knot_value() {
            Ok(a + ((1.0 - alpha) * (b - a) * (c - a)).sqrt())
        } else {
            Ok(c - (alpha * (c - a) * (c - b)).sqrt())
        }
    }

    fn expected(&self) -> Result<f64> {
        Ok((self.a + self.b + self.c) / 3.0)
    }
}

/// Trapezoidal distribution `TRA(a, b, c, d)`: quadratic ramps joined by a
/// linear middle piece on `[b, c]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidalUd {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl TrapezoidalUd {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        check_increasing(&[a, b, c, d], "trapezoidal")?;
        Ok(Self { a, b, c, d })
    }

    pub fn params(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Normaliser `d + c − a − b`.
    pub fn scale(&self) -> f64 {
        self.d + self.c - self.a - self.b
    }

    /// `(Φ(b), Φ(c))`.
    pub fn knot_values(&self) -> (f64, f64) {
        let s = self.scale();
        ((self.b - self.a) / s, (2.0 * self.c - self.a - self.b) / s)
    }

    pub fn to_piecewise(&self) -> PiecewiseUd {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let s = self.scale();
        PiecewiseUd::new(
            vec![a, b, c, d],
            vec![
                Segment::Quadratic {
                    offset: 0.0,
                    curvature: 1.0 / (s * (b - a)),
                    center: a,
                },
                Segment::Affine {
                    intercept: -(a + b) / s,
                    slope: 2.0 / s,
                },
                Segment::Quadratic {
                    offset: 1.0,
                    curvature: -1.0 / (s * (d - c)),
                    center: d,
                },
            ],
        )
        .expect("trapezoidal parameters already validated")
    }

    fn quantile(&self, u: f64) -> f64 {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let s = self.scale();
        let (pb, pc) = self.knot_values();
        if u <= pb {
            a + (u * s * (b - a)).sqrt()
        } else if u <= pc {
            0.5 * ((a + b) + u * s)
        } else {
            d - ((1.0 - u) * s * (d - c)).sqrt()
        }
    }
}

impl UncertaintyDistribution for TrapezoidalUd {
    fn cdf(&self, x: f64) -> f64 {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let s = self.scale();
        if x <= a {
            0.0
        } else if x <= b {
            (x - a).powi(2) / (s * (b - a))
        } else if x <= c {
            (2.0 * x - a - b) / s
        } else if x < d {
            1.0 - (d - x).powi(2) / (s * (d - c))
        } else {
            1.0
        }
    }

    fn support(&self) -> (f64, f64) {
        (self.a, self.d)
    }

    fn inverse(&self, alpha: f64) -> Result<f64> {
        Ok(self.quantile(check_open_unit(alpha)?))
    }

    fn optimistic(&self, alpha: f64) -> Result<f64> {
        let alpha = check_open_unit(alpha)?;
        Ok(self.quantile(1.0 - alpha))
    }

    fn expected(&self) -> Result<f64> {
        let (a, b, c, d) = (self.a, self.b, self.c, self.d);
        let upper = (d.powi(3) - c.powi(3)) / (d - c);
        let lower = (b.powi(3) - a.powi(3)) / (b - a);
        Ok((upper - lower) / (3.0 * self.scale()))
    }
}

/// One piece of a [`PiecewiseUd`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Segment {
    Constant(f64),
    /// `intercept + slope·x`
    Affine {
        intercept: f64,
        slope: f64,
    },
    /// `offset + curvature·(x − center)²`
    Quadratic {
        offset: f64,
        curvature: f64,
        center: f64,
    },
}

impl Segment {
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Segment::Constant(v) => v,
            Segment::Affine { intercept, slope } => intercept + slope * x,
            Segment::Quadratic {
                offset,
                curvature,
                center,
            } => offset + curvature * (x - center).powi(2),
        }
    }

    /// Smallest `x` in `[l, r]` with `eval(x) >= target`, assuming the
    /// segment is non-decreasing on `[l, r]` and `eval(l) < target <= eval(r)`.
    fn invert(&self, target: f64, l: f64, r: f64) -> f64 {
        let analytic = match *self {
            Segment::Constant(_) => Some(l),
            Segment::Affine { intercept, slope } if slope > 0.0 => {
                Some((target - intercept) / slope)
            }
            Segment::Quadratic {
                offset,
                curvature,
                center,
            } if curvature != 0.0 => {
                let u = (target - offset) / curvature;
                if u < 0.0 {
                    None
                } else if center <= l {
                    Some(center + u.sqrt())
                } else if center >= r {
                    Some(center - u.sqrt())
                } else {
                    None
                }
            }
            _ => None,
        };
        let slack = 1e-9 * (1.0 + l.abs().max(r.abs()));
        match analytic {
            Some(x) if x >= l - slack && x <= r + slack => x.clamp(l, r),
            _ => bisect_lower(|x| self.eval(x), target, l, r),
        }
    }

    /// Closed-form `∫ Φ⁻¹(γ) dγ` over the image `[g_lo, g_hi]` of `[l, r]`.
    /// `None` when the inverse has no closed form on this piece.
    fn inverse_integral(&self, l: f64, r: f64, g_lo: f64, g_hi: f64) -> Option<f64> {
        let dg = g_hi - g_lo;
        if dg < 0.0 {
            return None;
        }
        match *self {
            Segment::Constant(_) => Some(0.0),
            Segment::Affine { slope, .. } if slope > 0.0 => Some(0.5 * (l + r) * dg),
            Segment::Affine { .. } => Some(0.0),
            Segment::Quadratic {
                offset,
                curvature,
                center,
            } => {
                if curvature == 0.0 {
                    return Some(0.0);
                }
                let sign = if center <= l {
                    1.0
                } else if center >= r {
                    -1.0
                } else {
                    return None;
                };
                let u_lo = ((g_lo - offset) / curvature).max(0.0);
                let u_hi = ((g_hi - offset) / curvature).max(0.0);
                let root_part = 2.0 * curvature / 3.0 * (u_hi.powf(1.5) - u_lo.powf(1.5));
                Some(center * dg + sign * root_part)
            }
        }
    }
}

/// A piecewise distribution on `[breakpoints[0], breakpoints[last]]`.
///
/// Segment `i` covers `[breakpoints[i], breakpoints[i + 1])`. Isolated
/// abscissae may carry their own value (the plateau values of reduced
/// two-fold distributions); they override the segment formula at exactly
/// that point.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseUd {
    breakpoints: Vec<f64>,
    segments: Vec<Segment>,
    point_values: Vec<(f64, f64)>,
}

impl PiecewiseUd {
    pub fn new(breakpoints: Vec<f64>, segments: Vec<Segment>) -> Result<Self> {
        Self::with_point_values(breakpoints, segments, Vec::new())
    }

    pub fn with_point_values(
        breakpoints: Vec<f64>,
        segments: Vec<Segment>,
        point_values: Vec<(f64, f64)>,
    ) -> Result<Self> {
        if segments.is_empty() || breakpoints.len() != segments.len() + 1 {
            return Err(Error::invalid(format!(
                "{} breakpoints for {} segments",
                breakpoints.len(),
                segments.len()
            )));
        }
        check_increasing(&breakpoints, "breakpoint")?;
        let (lo, hi) = (breakpoints[0], breakpoints[breakpoints.len() - 1]);
        for &(x, v) in &point_values {
            if !(x > lo && x < hi) || !(0.0..=1.0).contains(&v) {
                return Err(Error::invalid(format!(
                    "point value ({x}, {v}) must lie inside the support with value in [0, 1]"
                )));
            }
        }
        Ok(Self {
            breakpoints,
            segments,
            point_values,
        })
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn point_values(&self) -> &[(f64, f64)] {
        &self.point_values
    }

    fn lo(&self) -> f64 {
        self.breakpoints[0]
    }

    fn hi(&self) -> f64 {
        self.breakpoints[self.breakpoints.len() - 1]
    }

    fn segment_bounds(&self, i: usize) -> (f64, f64) {
        (self.breakpoints[i], self.breakpoints[i + 1])
    }

    /// Inverse on the closed interval: `γ <= 0` maps to the lower support
    /// bound, `γ >= 1` to the upper one.
    pub(crate) fn quantile(&self, gamma: f64) -> f64 {
        for (i, seg) in self.segments.iter().enumerate() {
            let (l, r) = self.segment_bounds(i);
            if self.cdf(l) >= gamma {
                return l;
            }
            if seg.eval(r) >= gamma {
                return seg.invert(gamma, l, r);
            }
        }
        self.hi()
    }

    /// Distinct `Φ` levels at the segment ends, including one-sided limits.
    fn gamma_knots(&self) -> Vec<f64> {
        let mut knots = vec![0.0, 1.0];
        for (i, seg) in self.segments.iter().enumerate() {
            let (l, r) = self.segment_bounds(i);
            knots.push(seg.eval(l).clamp(0.0, 1.0));
            knots.push(seg.eval(r).clamp(0.0, 1.0));
        }
        knots.sort_by(f64::total_cmp);
        knots.dedup_by(|a, b| (*a - *b).abs() <= 1e-15);
        knots
    }
}

impl UncertaintyDistribution for PiecewiseUd {
    fn cdf(&self, x: f64) -> f64 {
        if x <= self.lo() {
            return 0.0;
        }
        if x >= self.hi() {
            return 1.0;
        }
        if let Some(&(_, v)) = self.point_values.iter().find(|(px, _)| *px == x) {
            return v;
        }
        let idx = self
            .breakpoints
            .partition_point(|&b| b <= x)
            .saturating_sub(1)
            .min(self.segments.len() - 1);
        self.segments[idx].eval(x)
    }

    fn support(&self) -> (f64, f64) {
        (self.lo(), self.hi())
    }

    fn inverse(&self, alpha: f64) -> Result<f64> {
        Ok(self.quantile(check_open_unit(alpha)?))
    }

    fn expected(&self) -> Result<f64> {
        expected_via_quadrature(self)
    }
}

/// `∫₀¹ Φ⁻¹(γ) dγ` for a piecewise distribution.
///
/// Each piece whose inverse is affine or of the form `p ± √(q + r·γ)` is
/// integrated in closed form; jumps contribute `abscissa × gap`. Pieces
/// without a closed-form inverse fall back to adaptive Simpson.
pub fn expected_via_quadrature(ud: &PiecewiseUd) -> Result<f64> {
    let mut total = 0.0;
    let mut prev_level = 0.0;
    for (i, seg) in ud.segments.iter().enumerate() {
        let (l, r) = ud.segment_bounds(i);
        let g_lo = seg.eval(l).clamp(0.0, 1.0);
        let g_hi = seg.eval(r).clamp(0.0, 1.0);
        total += l * (g_lo - prev_level).max(0.0);
        match seg.inverse_integral(l, r, g_lo, g_hi) {
            Some(v) => total += v,
            None => total += simpson_inverse(ud, g_lo, g_hi, QuadShare::of(g_hi - g_lo))?,
        }
        prev_level = g_hi.max(prev_level);
    }
    total += ud.hi() * (1.0 - prev_level).max(0.0);
    Ok(total)
}

/// `∫₀¹ Φ⁻¹(γ) dγ` by adaptive Simpson alone, one panel per monotone piece of
/// the inverse. Independent of the closed-form antiderivatives used by
/// [`expected_via_quadrature`].
pub fn expected_by_simpson(ud: &PiecewiseUd) -> Result<f64> {
    let knots = ud.gamma_knots();
    knots.windows(2).try_fold(0.0, |acc, w| {
        Ok(acc + simpson_inverse(ud, w[0], w[1], QuadShare::of(w[1] - w[0]))?)
    })
}

struct QuadShare(f64);

impl QuadShare {
    fn of(width: f64) -> Self {
        QuadShare(width.clamp(1e-6, 1.0))
    }
}

/// Simpson on `γ ∈ [g0, g1]` after the substitution
/// `γ = g0 + (g1 − g0)(3t² − 2t³)`, which removes the square-root endpoint
/// singularities of quadratic pieces.
fn simpson_inverse(ud: &PiecewiseUd, g0: f64, g1: f64, share: QuadShare) -> Result<f64> {
    let width = g1 - g0;
    if width <= 0.0 {
        return Ok(0.0);
    }
    let cfg = SimpsonConfig {
        tolerance: SimpsonConfig::default().tolerance * share.0,
        ..SimpsonConfig::default()
    };
    adaptive_simpson(
        |t| {
            let gamma = g0 + width * t * t * (3.0 - 2.0 * t);
            let jac = width * 6.0 * t * (1.0 - t);
            if jac == 0.0 {
                0.0
            } else {
                ud.quantile(gamma) * jac
            }
        },
        0.0,
        1.0,
        cfg,
    )
}

/// A point where the sampled distribution decreased.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Decrease {
    pub x_prev: f64,
    pub x: f64,
    pub drop: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegularityReport {
    pub samples: usize,
    pub decreases: Vec<Decrease>,
    /// Sampled points whose value fell outside `[0, 1]`.
    pub out_of_range: Vec<(f64, f64)>,
    pub value_at_lo: f64,
    pub value_at_hi: f64,
}

impl RegularityReport {
    pub fn passed(&self) -> bool {
        self.decreases.is_empty()
            && self.out_of_range.is_empty()
            && self.value_at_lo == 0.0
            && self.value_at_hi == 1.0
    }
}

pub const REGULARITY_SAMPLES: usize = 10_000;
pub const REGULARITY_SLACK: f64 = 1e-12;

/// Samples `Φ` on a uniform grid over `[lo − 1, hi + 1]` and records every
/// decrease larger than [`REGULARITY_SLACK`].
pub fn check_regularity<U>(ud: &U) -> RegularityReport
where
    U: UncertaintyDistribution + ?Sized,
{
    let (lo, hi) = ud.support();
    let (start, end) = (lo - 1.0, hi + 1.0);
    let n = REGULARITY_SAMPLES;
    let step = (end - start) / (n - 1) as f64;
    let mut decreases = Vec::new();
    let mut out_of_range = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..n {
        let x = if i == n - 1 {
            end
        } else {
            start + step * i as f64
        };
        let v = ud.cdf(x);
        if !(0.0..=1.0).contains(&v) {
            out_of_range.push((x, v));
        }
        if let Some((px, pv)) = prev {
            if pv - v > REGULARITY_SLACK {
                decreases.push(Decrease {
                    x_prev: px,
                    x,
                    drop: pv - v,
                });
            }
        }
        prev = Some((x, v));
    }
    RegularityReport {
        samples: n,
        decreases,
        out_of_range,
        value_at_lo: ud.cdf(lo),
        value_at_hi: ud.cdf(hi),
    }
}
