//! Triangular and trapezoidal two-fold uncertain variables.
//!
//! At every interior abscissa the distribution value of a two-fold variable
//! is itself a linear uncertain variable `L(lo, hi)` with
//! `lo = F − θl·m` and `hi = F + θr·m`, where `F` is the base single-fold
//! distribution and `m` the distance from `F` to the nearest plateau level.
//! Collapsing that band with a critical-value criterion gives
//! `F − k·m` for a scalar `k` that depends only on the criterion.

use crate::error::{check_open_unit, Error, Result};
use crate::uncertain::{
    PiecewiseUd, Segment, TrapezoidalUd, TriangularUd, UncertaintyDistribution,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TwoFoldFamily {
    Triangular(TriangularUd),
    Trapezoidal(TrapezoidalUd),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoFoldUv {
    family: TwoFoldFamily,
    theta_l: f64,
    theta_r: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ReductionCriterion {
    Optimistic(f64),
    Pessimistic(f64),
    Expected,
}

impl ReductionCriterion {
    pub fn optimistic(alpha: f64) -> Result<Self> {
        Ok(Self::Optimistic(check_open_unit(alpha)?))
    }

    pub fn pessimistic(alpha: f64) -> Result<Self> {
        Ok(Self::Pessimistic(check_open_unit(alpha)?))
    }

    /// Scalar `k` in `Φ_red = F − k·m`.
    pub fn multiplier(&self, theta_l: f64, theta_r: f64) -> Result<f64> {
        Ok(match *self {
            Self::Optimistic(alpha) => {
                let alpha = check_open_unit(alpha)?;
                alpha * theta_l - (1.0 - alpha) * theta_r
            }
            Self::Pessimistic(alpha) => {
                let alpha = check_open_unit(alpha)?;
                (1.0 - alpha) * theta_l - alpha * theta_r
            }
            Self::Expected => 0.5 * (theta_l - theta_r),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Optimistic(_) => "optimistic",
            Self::Pessimistic(_) => "pessimistic",
            Self::Expected => "expected",
        }
    }
}

/// Value of the two-fold distribution at a fixed abscissa.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Envelope {
    Constant(f64),
    Band { lo: f64, hi: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub x: f64,
    pub envelope: Envelope,
}

/// Base value `F(x)` and band half-width `m(x)` on an open ramp region.
#[derive(Debug, Clone, Copy)]
struct Ramp {
    base: f64,
    width: f64,
}

fn check_theta(theta: f64, name: &str) -> Result<f64> {
    if (0.0..=1.0).contains(&theta) {
        Ok(theta)
    } else {
        Err(Error::invalid(format!(
            "{name} must lie in [0, 1], got {theta}"
        )))
    }
}

impl TwoFoldUv {
    pub fn new(family: TwoFoldFamily, theta_l: f64, theta_r: f64) -> Result<Self> {
        Ok(Self {
            family,
            theta_l: check_theta(theta_l, "theta_l")?,
            theta_r: check_theta(theta_r, "theta_r")?,
        })
    }

    pub fn triangular(a: f64, b: f64, c: f64, theta_l: f64, theta_r: f64) -> Result<Self> {
        Self::new(
            TwoFoldFamily::Triangular(TriangularUd::new(a, b, c)?),
            theta_l,
            theta_r,
        )
    }

    pub fn trapezoidal(a: f64, b: f64, c: f64, d: f64, theta_l: f64, theta_r: f64) -> Result<Self> {
        Self::new(
            TwoFoldFamily::Trapezoidal(TrapezoidalUd::new(a, b, c, d)?),
            theta_l,
            theta_r,
        )
    }

    pub fn family(&self) -> &TwoFoldFamily {
        &self.family
    }

    pub fn theta_l(&self) -> f64 {
        self.theta_l
    }

    pub fn theta_r(&self) -> f64 {
        self.theta_r
    }

    pub fn support(&self) -> (f64, f64) {
        match &self.family {
            TwoFoldFamily::Triangular(t) => t.support(),
            TwoFoldFamily::Trapezoidal(t) => t.support(),
        }
    }

    /// The underlying single-fold distribution evaluated at `x`.
    pub fn base_cdf(&self, x: f64) -> f64 {
        match &self.family {
            TwoFoldFamily::Triangular(t) => t.cdf(x),
            TwoFoldFamily::Trapezoidal(t) => t.cdf(x),
        }
    }

    /// Plateau abscissae and their fixed values.
    pub fn plateaus(&self) -> Vec<(f64, f64)> {
        match &self.family {
            TwoFoldFamily::Triangular(t) => {
                let [_, b, _] = t.params();
                vec![(b, t.knot_value())]
            }
            TwoFoldFamily::Trapezoidal(t) => {
                let [_, b, c, _] = t.params();
                let (pb, pc) = t.knot_values();
                vec![(b, pb), (c, pc)]
            }
        }
    }

    fn ramp(&self, x: f64) -> Option<Ramp> {
        let (lo, hi) = self.support();
        if x <= lo || x >= hi || self.plateaus().iter().any(|&(px, _)| px == x) {
            return None;
        }
        let base = self.base_cdf(x);
        let width = match &self.family {
            TwoFoldFamily::Triangular(t) => {
                let [_, b, _] = t.params();
                let p = t.knot_value();
                if x < b {
                    base.min(p - base)
                } else {
                    (base - p).min(1.0 - base)
                }
            }
            TwoFoldFamily::Trapezoidal(t) => {
                let [_, b, c, _] = t.params();
                let (pb, pc) = t.knot_values();
                if x < b {
                    base.min(pb - base)
                } else if x < c {
                    (base - pb).min(pc - base)
                } else {
                    (base - pc).min(1.0 - base)
                }
            }
        };
        Some(Ramp {
            base,
            width: width.max(0.0),
        })
    }

    pub fn surface_at(&self, x: f64) -> SurfacePoint {
        let envelope = match self.ramp(x) {
            Some(Ramp { base, width }) => Envelope::Band {
                lo: base - self.theta_l * width,
                hi: base + self.theta_r * width,
            },
            None => Envelope::Constant(
                self.plateaus()
                    .iter()
                    .find(|&&(px, _)| px == x)
                    .map_or_else(|| self.base_cdf(x), |&(_, v)| v),
            ),
        };
        SurfacePoint { x, envelope }
    }

    /// Two-fold distribution `Φ̃(x, y)`.
    ///
    /// A band of zero width acts as a step at `lo`.
    pub fn twofold_cdf(&self, x: f64, y: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&y) {
            return Err(Error::YOutOfRange(y));
        }
        Ok(match self.surface_at(x).envelope {
            Envelope::Constant(v) => v,
            Envelope::Band { lo, hi } if hi > lo => {
                if y <= lo {
                    0.0
                } else if y >= hi {
                    1.0
                } else {
                    (y - lo) / (hi - lo)
                }
            }
            Envelope::Band { lo, .. } => {
                if y < lo {
                    0.0
                } else {
                    1.0
                }
            }
        })
    }

    /// Reduced single-fold distribution under `criterion`.
    pub fn reduce(&self, criterion: ReductionCriterion) -> Result<PiecewiseUd> {
        let k = criterion.multiplier(self.theta_l, self.theta_r)?;
        Ok(self.reduce_with_multiplier(k))
    }

    /// Reduced distribution `F − k·m` for an explicit multiplier. Every
    /// criterion yields `k ∈ [−1, 1]`.
    pub fn reduce_with_multiplier(&self, k: f64) -> PiecewiseUd {
        let sqrt2 = std::f64::consts::SQRT_2;
        let (breakpoints, segments) = match &self.family {
            TwoFoldFamily::Triangular(t) => {
                let [a, b, c] = t.params();
                let p = t.knot_value();
                let q = 1.0 - p;
                let left_curv = 1.0 / ((b - a) * (c - a));
                let right_curv = 1.0 / ((c - a) * (c - b));
                (
                    vec![a, a + (b - a) / sqrt2, b, c - (c - b) / sqrt2, c],
                    vec![
                        rising(0.0, (1.0 - k) * left_curv, a),
                        rising(-k * p, (1.0 + k) * left_curv, a),
                        falling(1.0 - k * q, (1.0 - k) * right_curv, c),
                        falling(1.0, (1.0 + k) * right_curv, c),
                    ],
                )
            }
            TwoFoldFamily::Trapezoidal(t) => {
                let [a, b, c, d] = t.params();
                let s = t.scale();
                let (pb, pc) = t.knot_values();
                let q = 1.0 - pc;
                let left_curv = 1.0 / (s * (b - a));
                let right_curv = 1.0 / (s * (d - c));
                let base_intercept = -(a + b) / s;
                let base_slope = 2.0 / s;
                (
                    vec![
                        a,
                        a + (b - a) / sqrt2,
                        b,
                        0.5 * (b + c),
                        c,
                        d - (d - c) / sqrt2,
                        d,
                    ],
                    vec![
                        rising(0.0, (1.0 - k) * left_curv, a),
                        rising(-k * pb, (1.0 + k) * left_curv, a),
                        Segment::Affine {
                            intercept: (1.0 - k) * base_intercept + k * pb,
                            slope: (1.0 - k) * base_slope,
                        },
                        Segment::Affine {
                            intercept: (1.0 + k) * base_intercept - k * pc,
                            slope: (1.0 + k) * base_slope,
                        },
                        falling(1.0 - k * q, (1.0 - k) * right_curv, d),
                        falling(1.0, (1.0 + k) * right_curv, d),
                    ],
                )
            }
        };
        PiecewiseUd::with_point_values(breakpoints, segments, self.plateaus())
            .expect("family parameters already validated")
    }

    /// `Φ⁻¹_red(γ)` for the reduced distribution.
    pub fn reduced_inverse(&self, criterion: ReductionCriterion, gamma: f64) -> Result<f64> {
        self.reduce(criterion)?.inverse(gamma)
    }

    /// `samples` evenly spaced points `(x, Φ_red(x))` across the support.
    pub fn sample_curve(
        &self,
        criterion: ReductionCriterion,
        samples: usize,
    ) -> Result<Vec<(f64, f64)>> {
        if samples < 2 {
            return Err(Error::invalid(format!(
                "need at least 2 samples, got {samples}"
            )));
        }
        let ud = self.reduce(criterion)?;
        let (lo, hi) = self.support();
        let step = (hi - lo) / (samples - 1) as f64;
        Ok((0..samples)
            .map(|i| {
                let x = if i == samples - 1 {
                    hi
                } else {
                    lo + step * i as f64
                };
                (x, ud.cdf(x))
            })
            .collect())
    }
}

fn rising(offset: f64, curvature: f64, center: f64) -> Segment {
    Segment::Quadratic {
        offset,
        curvature,
        center,
    }
}

fn falling(offset: f64, curvature: f64, center: f64) -> Segment {
    Segment::Quadratic {
        offset,
        curvature: -curvature,
        center,
    }
}
