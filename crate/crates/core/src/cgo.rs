//! Complex geometrical optics solutions `u0(x) = exp(rho . x)` with
//! `rho = s (d + i d_perp)`, `|d| = |d_perp| = 1`, `d . d_perp = 0`, so that
//! `rho . rho = 0` and `u0` is harmonic. Also: admissible-direction selection
//! with a quantified decay margin, and closed-form / quadrature integrals of
//! `u0` over rectangles and meshes.

use crate::error::{Error, Result};
use crate::geometry::Mesh2D;
use crate::point::{Point, Point3};
use crate::quad::triangle_points;
use crate::C64;
use serde::Serialize;

pub use crate::special::{
    incomplete_gamma_lower, incomplete_gamma_tail_bound, incomplete_gamma_upper,
};

const ORTHO_TOL: f64 = 1e-14;

/// CGO exponent data in the plane.
#[derive(Debug, Clone, Copy)]
pub struct CgoParams {
    s: f64,
    d: Point,
    d_perp: Point,
}

impl CgoParams {
    /// Validates `s > 0`, unit lengths, and orthogonality to 1e-14.
    pub fn new(s: f64, d: Point, d_perp: Point) -> Result<Self> {
        if s < 0.0 {
            return Err(Error::Domain(format!("amplitude s must be nonnegative, got {s}")));
        }
        if (d.norm() - 1.0).abs() > ORTHO_TOL || (d_perp.norm() - 1.0).abs() > ORTHO_TOL {
            return Err(Error::Domain("d and d_perp must be unit vectors".into()));
        }
        if d.dot(d_perp).abs() > ORTHO_TOL {
            return Err(Error::Domain("d and d_perp must be orthogonal".into()));
        }
        Ok(CgoParams { s, d, d_perp })
    }

    /// Direction `d` together with its counterclockwise perpendicular.
    pub fn from_direction(s: f64, d: Point) -> Result<Self> {
        Self::new(s, d.normalized(), d.normalized().perp())
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn d(&self) -> Point {
        self.d
    }

    pub fn d_perp(&self) -> Point {
        self.d_perp
    }

    /// rho = s (d + i d_perp), componentwise.
    pub fn rho(&self) -> [C64; 2] {
        [
            C64::new(self.s * self.d.x, self.s * self.d_perp.x),
            C64::new(self.s * self.d.y, self.s * self.d_perp.y),
        ]
    }

    /// rho . rho; zero in exact arithmetic.
    pub fn rho_dot_rho(&self) -> C64 {
        let r = self.rho();
        r[0] * r[0] + r[1] * r[1]
    }
}

/// u0(x) = exp(s d.x) (cos(s d_perp.x) + i sin(s d_perp.x)).
pub fn cgo_eval(p: &CgoParams, x: Point) -> C64 {
    let re = p.s * p.d.dot(x);
    let im = p.s * p.d_perp.dot(x);
    C64::from_polar(re.exp(), im)
}

/// Gradient of u0: rho_j u0(x).
pub fn cgo_grad(p: &CgoParams, x: Point) -> [C64; 2] {
    let u = cgo_eval(p, x);
    let r = p.rho();
    [r[0] * u, r[1] * u]
}

/// 3D CGO parameters with the fixed-axis orthogonal pair
/// `d_perp = (-d2, d1, 0)`.
#[derive(Debug, Clone, Copy)]
pub struct CgoParams3 {
    s: f64,
    d: Point3,
    d_perp: Point3,
}

impl CgoParams3 {
    pub fn from_direction(s: f64, d: Point3) -> Result<Self> {
        let d = d.normalized();
        let planar = (d.x * d.x + d.y * d.y).sqrt();
        if planar < 1e-12 {
            return Err(Error::Domain(
                "3D direction must have a nonzero planar component for the fixed-axis pair".into(),
            ));
        }
        let d_perp = Point3::new(-d.y / planar, d.x / planar, 0.0);
        if s < 0.0 {
            return Err(Error::Domain("amplitude must be nonnegative".into()));
        }
        Ok(CgoParams3 { s, d, d_perp })
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn d(&self) -> Point3 {
        self.d
    }

    pub fn d_perp(&self) -> Point3 {
        self.d_perp
    }

    pub fn eval(&self, x: Point3) -> C64 {
        C64::from_polar((self.s * self.d.dot(x)).exp(), self.s * self.d_perp.dot(x))
    }
}

/// Certified decay direction: `d . x <= -delta |x|` on the sampled domain.
#[derive(Debug, Clone, Serialize)]
pub struct DecayCertificate {
    /// Admissible direction.
    pub d: Point,
    /// Decay margin in (0, 1].
    pub delta: f64,
    /// Minimum |x| over the certified samples.
    pub r_min: f64,
    /// Angular extent of the domain seen from the origin.
    pub theta1: f64,
    pub theta2: f64,
    /// Polar angle of d (recoverable as atan2).
    pub phi: f64,
}

/// Choose the admissible direction for a vertex cloud: d is the negated unit
/// bisector of the angular sector spanned by the vertices, and delta is the
/// exact minimum of `-d.x/|x|` over them (vertex evaluation is exact for
/// polygons by convexity of the linear functional).
pub fn select_direction(vertices: &[Point]) -> Result<DecayCertificate> {
    if vertices.is_empty() {
        return Err(Error::Sector("no vertices given".into()));
    }
    let mut angles = Vec::with_capacity(vertices.len());
    let mut r_min = f64::INFINITY;
    for v in vertices {
        let r = v.norm();
        if r == 0.0 {
            return Err(Error::Sector("vertex at the origin".into()));
        }
        r_min = r_min.min(r);
        angles.push(v.angle());
    }
    // Minimal enclosing arc: complement of the largest circular gap.
    let mut sorted = angles.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len();
    let tau = 2.0 * std::f64::consts::PI;
    let (mut gap, mut gap_end) = (tau - (sorted[n - 1] - sorted[0]), sorted[0]);
    for w in sorted.windows(2) {
        let g = w[1] - w[0];
        if g > gap {
            gap = g;
            gap_end = w[1];
        }
    }
    let width = tau - gap;
    if width >= std::f64::consts::PI {
        return Err(Error::Sector(format!(
            "domain subtends an angular sector of width {width:.6} >= pi"
        )));
    }
    // sector spans [gap_end, gap_end + width]
    let bisector = gap_end + width / 2.0;
    let d = -Point::new(bisector.cos(), bisector.sin());
    let mut delta = f64::INFINITY;
    for v in vertices {
        delta = delta.min(-d.dot(*v) / v.norm());
    }
    if delta <= 0.0 {
        return Err(Error::Sector(format!("nonpositive decay margin {delta}")));
    }
    Ok(DecayCertificate {
        d,
        delta: delta.min(1.0),
        r_min,
        theta1: gap_end,
        theta2: gap_end + width,
        phi: d.angle(),
    })
}

/// Certificate for a caller-supplied direction over the same vertex cloud;
/// errors if the direction has no positive margin.
pub fn certify_direction(d: Point, vertices: &[Point]) -> Result<DecayCertificate> {
    if vertices.is_empty() {
        return Err(Error::Sector("no vertices given".into()));
    }
    let mut delta = f64::INFINITY;
    let mut r_min = f64::INFINITY;
    let mut th_lo = f64::INFINITY;
    let mut th_hi = f64::NEG_INFINITY;
    for v in vertices {
        let r = v.norm();
        if r == 0.0 {
            return Err(Error::Sector("vertex at the origin".into()));
        }
        r_min = r_min.min(r);
        delta = delta.min(-d.dot(*v) / r);
        th_lo = th_lo.min(v.angle());
        th_hi = th_hi.max(v.angle());
    }
    if delta <= 0.0 {
        return Err(Error::Sector(format!(
            "direction ({}, {}) has nonpositive margin {delta}",
            d.x, d.y
        )));
    }
    Ok(DecayCertificate {
        d,
        delta: delta.min(1.0),
        r_min,
        theta1: th_lo,
        theta2: th_hi,
        phi: d.angle(),
    })
}

/// Axis-aligned rectangle.
#[derive(Debug, Clone, Copy)]
pub struct Rect2 {
    pub lo: Point,
    pub hi: Point,
}

impl Rect2 {
    pub fn new(lo: Point, hi: Point) -> Self {
        Rect2 { lo, hi }
    }

    pub fn area(&self) -> f64 {
        (self.hi.x - self.lo.x) * (self.hi.y - self.lo.y)
    }
}

/// One-dimensional factor `int_a^b exp(r t) dt`, with the small-argument
/// Taylor branch at |r (b - a)| < 1e-8 to avoid cancellation.
fn exp_segment_integral(r: C64, a: f64, b: f64) -> C64 {
    let len = b - a;
    let z = r * len;
    if z.norm() < 1e-8 {
        // (b-a) e^(ra) (1 + z/2 + z^2/6 + z^3/24)
        let series = C64::new(1.0, 0.0) + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
        (r * a).exp() * len * series
    } else {
        ((r * b).exp() - (r * a).exp()) / r
    }
}

/// Exact tensor-product integral of u0 over an axis-aligned rectangle.
pub fn integrate_cgo_rect(p: &CgoParams, rect: Rect2) -> C64 {
    let r = p.rho();
    exp_segment_integral(r[0], rect.lo.x, rect.hi.x) * exp_segment_integral(r[1], rect.lo.y, rect.hi.y)
}

/// 7-point-per-triangle quadrature of u0 over a mesh.
pub fn integrate_cgo_mesh(p: &CgoParams, mesh: &Mesh2D) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for t in &mesh.triangles {
        for (q, w) in triangle_points(mesh.nodes[t[0]], mesh.nodes[t[1]], mesh.nodes[t[2]]) {
            acc += w * cgo_eval(p, q);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{GAUSS5_NODES, GAUSS5_WEIGHTS};
    use approx::assert_relative_eq;

    fn params(s: f64, d: Point) -> CgoParams {
        CgoParams::from_direction(s, d).unwrap()
    }

    #[test]
    fn eval_at_origin_is_one() {
        let p = params(2.0, Point::new(0.6, 0.8));
        let v = cgo_eval(&p, Point::new(0.0, 0.0));
        assert_relative_eq!(v.re, 1.0);
        assert_relative_eq!(v.im, 0.0);
    }

    #[test]
    fn eval_direct_substitution() {
        // s = 1, d = (0, -1), d_perp = (1, 0): at x = (0, 1), d.x = -1, d_perp.x = 0
        let p = CgoParams::new(1.0, Point::new(0.0, -1.0), Point::new(1.0, 0.0)).unwrap();
        let v = cgo_eval(&p, Point::new(0.0, 1.0));
        assert_relative_eq!(v.re, (-1.0f64).exp(), max_relative = 1e-15);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn rho_is_isotropic() {
        let p = params(3.0, Point::new(0.6, -0.8));
        assert!(p.rho_dot_rho().norm() < 1e-12);
    }

    #[test]
    fn grad_at_origin_is_rho() {
        let p = params(1.5, Point::new(1.0, 0.0));
        let g = cgo_grad(&p, Point::new(0.0, 0.0));
        let r = p.rho();
        assert_relative_eq!(g[0].re, r[0].re);
        assert_relative_eq!(g[1].im, r[1].im);
        // directional derivative along d_perp at 0 equals i s
        let dd = g[0] * C64::new(p.d_perp().x, 0.0) + g[1] * C64::new(p.d_perp().y, 0.0);
        assert_relative_eq!(dd.re, 0.0, epsilon = 1e-12);
        assert_relative_eq!(dd.im, p.s(), max_relative = 1e-12);
    }

    #[test]
    fn grad_matches_central_differences() {
        let p = params(1.2, Point::new(0.28, -0.96));
        let h = 1e-6;
        for &x in &[Point::new(0.3, 0.4), Point::new(-0.7, 0.1)] {
            let g = cgo_grad(&p, x);
            let fdx = (cgo_eval(&p, Point::new(x.x + h, x.y)) - cgo_eval(&p, Point::new(x.x - h, x.y)))
                / (2.0 * h);
            let fdy = (cgo_eval(&p, Point::new(x.x, x.y + h)) - cgo_eval(&p, Point::new(x.x, x.y - h)))
                / (2.0 * h);
            assert!((g[0] - fdx).norm() / g[0].norm() < 1e-7);
            assert!((g[1] - fdy).norm() / g[1].norm() < 1e-7);
        }
    }

    #[test]
    fn singleton_certificate() {
        let c = select_direction(&[Point::new(1.0, 0.0)]).unwrap();
        assert_relative_eq!(c.d.x, -1.0, epsilon = 1e-12);
        assert_relative_eq!(c.d.y, 0.0, epsilon = 1e-12);
        assert_relative_eq!(c.delta, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn wide_sector_rejected() {
        let a = 100f64.to_radians();
        let verts = [
            Point::new(a.cos(), a.sin()),
            Point::new(a.cos(), -a.sin()),
            Point::new(1.0, 0.0),
        ];
        match select_direction(&verts) {
            Err(Error::Sector(_)) => {}
            other => panic!("expected sector error, got {other:?}"),
        }
    }

    #[test]
    fn narrow_cone_bisector_and_margin() {
        // vertices at +-20 degrees: d = (-1, 0), delta = cos(20 deg)
        let a = 20f64.to_radians();
        let verts = [
            Point::new(a.cos(), a.sin()),
            Point::new(a.cos(), -a.sin()),
            Point::new(1.0, 0.0),
        ];
        let c = select_direction(&verts).unwrap();
        assert_relative_eq!(c.d.x, -1.0, epsilon = 1e-12);
        assert_relative_eq!(c.delta, a.cos(), epsilon = 1e-12);
    }

    #[test]
    fn rect_integral_zero_exponent_is_area() {
        let p = params(0.0, Point::new(1.0, 0.0));
        let r = Rect2::new(Point::new(0.2, -0.4), Point::new(1.1, 0.3));
        let v = integrate_cgo_rect(&p, r);
        assert_relative_eq!(v.re, r.area(), max_relative = 1e-14);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn rect_integral_matches_tensor_gauss() {
        // 20-point tensor Gauss oracle (composite 4 x 5-point panels)
        let p = CgoParams::new(1.0, Point::new(-1.0, 0.0), Point::new(0.0, 1.0)).unwrap();
        let rect = Rect2::new(Point::new(0.0, 0.0), Point::new(1.0, 1.0));
        let mut oracle = C64::new(0.0, 0.0);
        let panels = 4;
        for px in 0..panels {
            for py in 0..panels {
                let x0 = px as f64 / panels as f64;
                let y0 = py as f64 / panels as f64;
                let half = 0.5 / panels as f64;
                for (&tx, &wx) in GAUSS5_NODES.iter().zip(GAUSS5_WEIGHTS.iter()) {
                    for (&ty, &wy) in GAUSS5_NODES.iter().zip(GAUSS5_WEIGHTS.iter()) {
                        let x = Point::new(x0 + half * (tx + 1.0), y0 + half * (ty + 1.0));
                        oracle += wx * wy * cgo_eval(&p, x) * half * half;
                    }
                }
            }
        }
        let v = integrate_cgo_rect(&p, rect);
        assert!((v - oracle).norm() < 1e-12, "diff {}", (v - oracle).norm());
    }

    #[test]
    fn small_rho_branch_continuous() {
        let d = Point::new(1.0, 0.0);
        let rect = Rect2::new(Point::new(0.0, 0.0), Point::new(1.0, 2.0));
        let v1 = integrate_cgo_rect(&params(1e-9, d), rect);
        let v2 = integrate_cgo_rect(&params(2e-8, d), rect);
        assert!((v1 - v2).norm() < 1e-7);
        assert_relative_eq!(v1.re, 2.0, max_relative = 1e-8);
    }

    #[test]
    fn certified_rect_integral_respects_decay() {
        // |int u0| <= area * exp(-s delta r_min) for a certified rectangle
        let rect = Rect2::new(Point::new(0.5, -0.05), Point::new(0.7, 0.05));
        let verts = [
            rect.lo,
            rect.hi,
            Point::new(rect.lo.x, rect.hi.y),
            Point::new(rect.hi.x, rect.lo.y),
        ];
        let cert = select_direction(&verts).unwrap();
        let p = CgoParams::from_direction(5.0, cert.d).unwrap();
        let v = integrate_cgo_rect(&p, rect);
        let bound = rect.area() * (-p.s() * cert.delta * cert.r_min).exp();
        assert!(v.norm() <= bound * (1.0 + 1e-12));
    }
}
