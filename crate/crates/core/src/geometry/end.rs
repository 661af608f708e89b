//! 2D thin ends and the nearest-lateral-point search.

use super::curve::GraphCurve;
use super::MIN_THICKNESS;
use crate::error::{Error, Result};
use crate::point::Point;

/// Which of the two lateral graphs a boundary point belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LateralSide {
    Top,
    Bottom,
}

/// Thin end `{ (t, x2) : t in (-L, L), gamma(t) - eps < x2 < gamma(t) }`,
/// swept by translating the vertical cross-section of length `eps` along the
/// graph curve. The lateral boundary consists of the two graphs
/// `(t, gamma(t))` and `(t, gamma(t) - eps)`; the end cross-sections at
/// t = +-L are excluded from it.
#[derive(Debug, Clone)]
pub struct ProductEnd2D {
    curve: GraphCurve,
    eps: f64,
    /// Amplitude constant: the construction requires `max|gamma| <= c_gamma * eps`.
    c_gamma: f64,
}

/// Result of the nearest-lateral-point search.
#[derive(Debug, Clone, Copy)]
pub struct NearestPoint {
    /// Minimizer on the lateral boundary.
    pub point: Point,
    /// Outward unit normal at the minimizer.
    pub normal: Point,
    /// Colinearity defect `|| (x0 - x)/|x0 - x| - nu ||`.
    pub residual: f64,
    /// Distance |x - x0|.
    pub dist: f64,
    /// Side of the lateral boundary the minimizer lies on.
    pub side: LateralSide,
    /// Curve parameter of the minimizer.
    pub param: f64,
}

/// Build a thin end of thickness `eps` over `curve`, checking the amplitude
/// bound with the default constant `c_gamma = 1`.
pub fn build_thin_end_2d(curve: GraphCurve, eps: f64) -> Result<ProductEnd2D> {
    ProductEnd2D::new(curve, eps, 1.0)
}

impl ProductEnd2D {
    pub fn new(curve: GraphCurve, eps: f64, c_gamma: f64) -> Result<Self> {
        if eps <= 0.0 {
            return Err(Error::Domain(format!("thickness must be positive, got {eps}")));
        }
        if eps < MIN_THICKNESS {
            return Err(Error::Domain(format!(
                "thickness {eps} below conditioning floor {MIN_THICKNESS}"
            )));
        }
        if curve.amplitude() > c_gamma * eps {
            return Err(Error::Geometry(format!(
                "curve amplitude {} exceeds c_gamma * eps = {}",
                curve.amplitude(),
                c_gamma * eps
            )));
        }
        Ok(ProductEnd2D { curve, eps, c_gamma })
    }

    pub fn curve(&self) -> &GraphCurve {
        &self.curve
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn c_gamma(&self) -> f64 {
        self.c_gamma
    }

    /// Top lateral graph point (t, gamma(t)).
    pub fn top(&self, t: f64) -> Point {
        Point::new(t, self.curve.value(t))
    }

    /// Bottom lateral graph point (t, gamma(t) - eps).
    pub fn bottom(&self, t: f64) -> Point {
        Point::new(t, self.curve.value(t) - self.eps)
    }

    /// Outward unit normal of the chosen lateral graph at parameter t.
    pub fn lateral_normal(&self, t: f64, side: LateralSide) -> Point {
        let d = self.curve.deriv(t);
        let n = Point::new(-d, 1.0) / (1.0 + d * d).sqrt();
        match side {
            LateralSide::Top => n,
            LateralSide::Bottom => -n,
        }
    }

    /// Strict interior test.
    pub fn contains(&self, p: Point) -> bool {
        let l = self.curve.half_length();
        if p.x <= -l || p.x >= l {
            return false;
        }
        let top = self.curve.value(p.x);
        p.y < top && p.y > top - self.eps
    }

    /// Every vertical section has length exactly eps.
    pub fn section_length(&self) -> f64 {
        self.eps
    }

    /// Nearest point on one lateral graph (seed grid + golden section +
    /// Newton polish, see [`GraphCurve::nearest_param`]).
    fn nearest_on_side(&self, x: Point, side: LateralSide) -> (f64, f64) {
        let off = match side {
            LateralSide::Top => 0.0,
            LateralSide::Bottom => -self.eps,
        };
        self.curve.nearest_param(x.x, x.y, off)
    }
}

/// Nearest point of the lateral boundary to an interior point `x`, with the
/// outward normal at the minimizer and the colinearity defect between
/// `(x0 - x)` and the normal. The distance never exceeds the thickness.
pub fn nearest_lateral_point(end: &ProductEnd2D, x: Point) -> Result<NearestPoint> {
    if !end.contains(x) {
        return Err(Error::Domain(format!(
            "point ({}, {}) is not strictly inside the end",
            x.x, x.y
        )));
    }
    let (t_top, d_top) = end.nearest_on_side(x, LateralSide::Top);
    let (t_bot, d_bot) = end.nearest_on_side(x, LateralSide::Bottom);
    let (t, dist, side) = if d_top <= d_bot {
        (t_top, d_top, LateralSide::Top)
    } else {
        (t_bot, d_bot, LateralSide::Bottom)
    };
    let point = match side {
        LateralSide::Top => end.top(t),
        LateralSide::Bottom => end.bottom(t),
    };
    let normal = end.lateral_normal(t, side);
    let dir = (point - x) / dist;
    let residual = (dir - normal).norm();
    assert!(
        dist <= end.eps() * (1.0 + 1e-12),
        "nearest lateral distance {dist} exceeded thickness {}",
        end.eps()
    );
    Ok(NearestPoint {
        point,
        normal,
        residual,
        dist,
        side,
        param: t,
    })
}

impl ProductEnd2D {
    /// See [`nearest_lateral_point`].
    pub fn nearest_lateral_point(&self, x: Point) -> Result<NearestPoint> {
        nearest_lateral_point(self, x)
    }

    /// Distance to the top graph together with foot parameter.
    pub fn distance_to_top(&self, x: Point) -> (f64, f64) {
        let (t, d) = self.nearest_on_side(x, LateralSide::Top);
        (d, t)
    }

    /// Distance to the bottom graph together with foot parameter.
    pub fn distance_to_bottom(&self, x: Point) -> (f64, f64) {
        let (t, d) = self.nearest_on_side(x, LateralSide::Bottom);
        (d, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn flat_strip_is_a_rectangle() {
        let end = build_thin_end_2d(GraphCurve::flat(1.0), 0.1).unwrap();
        assert_relative_eq!(end.top(0.5).y, 0.0);
        assert_relative_eq!(end.bottom(0.5).y, -0.1);
        assert!(end.contains(Point::new(0.0, -0.05)));
        assert!(!end.contains(Point::new(0.0, 0.05)));
        assert!(!end.contains(Point::new(1.5, -0.05)));
    }

    #[test]
    fn sine_amplitude_bound_accepted() {
        let curve = GraphCurve::sine(0.05, 1.0, 1.0, 65).unwrap();
        let end = build_thin_end_2d(curve, 0.1).unwrap();
        assert!(end.curve().amplitude() <= end.eps());
    }

    #[test]
    fn constant_one_rejected() {
        let curve = GraphCurve::constant(1.0, 1.0);
        match build_thin_end_2d(curve, 0.01) {
            Err(Error::Geometry(_)) => {}
            other => panic!("expected geometry error, got {other:?}"),
        }
    }

    #[test]
    fn nonpositive_thickness_rejected() {
        match build_thin_end_2d(GraphCurve::flat(1.0), 0.0) {
            Err(Error::Domain(_)) => {}
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn flat_midpoint_nearest_is_vertical() {
        let end = build_thin_end_2d(GraphCurve::flat(1.0), 0.1).unwrap();
        let np = nearest_lateral_point(&end, Point::new(0.2, -0.05)).unwrap();
        assert_relative_eq!(np.dist, 0.05, epsilon = 1e-12);
        assert!(np.residual < 1e-9, "residual {}", np.residual);
    }

    #[test]
    fn outside_point_rejected() {
        let end = build_thin_end_2d(GraphCurve::flat(1.0), 0.1).unwrap();
        assert!(nearest_lateral_point(&end, Point::new(0.0, 1.0)).is_err());
    }
}
