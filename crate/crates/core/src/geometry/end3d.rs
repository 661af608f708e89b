//! 3D product-type ends, carried as types for Assumption-G checks and the 3D
//! exponent arithmetic; no 3D solves are performed.

use super::curve::GraphCurve;
use super::MIN_THICKNESS;
use crate::error::{Error, Result};
use crate::point::Point3;

/// Cross-section swept along the planar curve `eta(t) = (0, t, gamma(t))`.
/// The section lives in the (x1, x3)-plane attached below the curve point.
#[derive(Debug, Clone)]
pub enum CrossSection {
    /// Thin end: disk of diameter eps, centered eps/2 below the curve.
    Disk { eps: f64 },
    /// Narrow end: rectangle of width eps (x3-extent) and conventional
    /// length (x1-extent), i.e. `x1 in (b, b + length)`, `x3 in (-eps, 0)`
    /// relative to the curve point.
    Rect { eps: f64, b: f64, length: f64 },
}

impl CrossSection {
    pub fn eps(&self) -> f64 {
        match self {
            CrossSection::Disk { eps } => *eps,
            CrossSection::Rect { eps, .. } => *eps,
        }
    }
}

/// 3D end: cross-section translated along the graph curve.
#[derive(Debug, Clone)]
pub struct ProductEnd3D {
    curve: GraphCurve,
    section: CrossSection,
}

/// Nearest-point result on the 3D lateral boundary.
#[derive(Debug, Clone, Copy)]
pub struct NearestPoint3 {
    pub point: Point3,
    pub normal: Point3,
    pub residual: f64,
    pub dist: f64,
}

impl ProductEnd3D {
    pub fn new(curve: GraphCurve, section: CrossSection) -> Result<Self> {
        let eps = section.eps();
        if eps < MIN_THICKNESS {
            return Err(Error::Domain(format!(
                "cross-section scale {eps} below conditioning floor"
            )));
        }
        if curve.amplitude() > eps {
            return Err(Error::Geometry(format!(
                "curve amplitude {} exceeds the section scale {eps}",
                curve.amplitude()
            )));
        }
        Ok(ProductEnd3D { curve, section })
    }

    pub fn curve(&self) -> &GraphCurve {
        &self.curve
    }

    pub fn section(&self) -> &CrossSection {
        &self.section
    }

    /// Strict interior test.
    pub fn contains(&self, p: Point3) -> bool {
        let l = self.curve.half_length();
        if p.y <= -l || p.y >= l {
            return false;
        }
        let g = self.curve.value(p.y);
        match self.section {
            CrossSection::Disk { eps } => {
                let r = eps / 2.0;
                let dz = p.z - (g - r);
                (p.x * p.x + dz * dz).sqrt() < r
            }
            CrossSection::Rect { eps, b, length } => {
                p.x > b && p.x < b + length && p.z < g && p.z > g - eps
            }
        }
    }
}

/// Nearest point of the 3D lateral boundary to an interior point, with the
/// outward normal and colinearity defect. For rectangle sections the search
/// reduces per face to the 2D graph problem; for disk sections a coarse
/// (t, theta) grid is refined by coordinate-wise golden section.
pub fn nearest_lateral_point_3d(end: &ProductEnd3D, x: Point3) -> Result<NearestPoint3> {
    if !end.contains(x) {
        return Err(Error::Domain("point is not strictly inside the 3D end".into()));
    }
    let curve = &end.curve;
    let result = match end.section {
        CrossSection::Rect { eps, b, length } => {
            // Four candidate faces. Top/bottom reduce to the 2D nearest-graph
            // problem in (y, z); front/back are planes x = b + length, x = b.
            let mut best: Option<NearestPoint3> = None;
            let mut consider = |cand: NearestPoint3| match &mut best {
                Some(cur) if cur.dist <= cand.dist => {}
                slot => *slot = Some(cand),
            };
            for (side_top, zoff) in [(true, 0.0), (false, -eps)] {
                let (t, d) = nearest_graph_param(curve, x.y, x.z - zoff);
                let gz = curve.value(t) + zoff;
                let dv = curve.deriv(t);
                let nrm = 1.0 / (1.0 + dv * dv).sqrt();
                let n2 = if side_top {
                    Point3::new(0.0, -dv * nrm, nrm)
                } else {
                    Point3::new(0.0, dv * nrm, -nrm)
                };
                let p0 = Point3::new(x.x, t, gz);
                let dist = d;
                let dir = (p0 - x) * (1.0 / dist);
                consider(NearestPoint3 {
                    point: p0,
                    normal: n2,
                    residual: (dir - n2).norm(),
                    dist,
                });
            }
            for (xf, sgn) in [(b, -1.0), (b + length, 1.0)] {
                let p0 = Point3::new(xf, x.y, x.z);
                let n = Point3::new(sgn, 0.0, 0.0);
                let dist = (x.x - xf).abs();
                let dir = (p0 - x) * (1.0 / dist);
                consider(NearestPoint3 {
                    point: p0,
                    normal: n,
                    residual: (dir - n).norm(),
                    dist,
                });
            }
            best.expect("at least one face candidate")
        }
        CrossSection::Disk { eps } => {
            let r = eps / 2.0;
            let l = curve.half_length();
            let surf = |t: f64, th: f64| {
                let g = curve.value(t);
                Point3::new(r * th.cos(), t, g - r + r * th.sin())
            };
            let dist2 = |t: f64, th: f64| {
                let p = surf(t, th);
                (p - x).dot(p - x)
            };
            // grid seed
            let (mut bt, mut bth, mut bd) = (0.0, 0.0, f64::INFINITY);
            const NT: usize = 96;
            const NTH: usize = 96;
            for i in 0..=NT {
                let t = -l + 2.0 * l * i as f64 / NT as f64;
                for j in 0..NTH {
                    let th = 2.0 * std::f64::consts::PI * j as f64 / NTH as f64;
                    let d = dist2(t, th);
                    if d < bd {
                        bd = d;
                        bt = t;
                        bth = th;
                    }
                }
            }
            // alternating golden refinements in each coordinate
            let golden = |f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64| -> f64 {
                let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
                let mut c = b - inv_phi * (b - a);
                let mut d = a + inv_phi * (b - a);
                let (mut fc, mut fd) = (f(c), f(d));
                for _ in 0..90 {
                    if fc < fd {
                        b = d;
                        d = c;
                        fd = fc;
                        c = b - inv_phi * (b - a);
                        fc = f(c);
                    } else {
                        a = c;
                        c = d;
                        fc = fd;
                        d = a + inv_phi * (b - a);
                        fd = f(d);
                    }
                }
                0.5 * (a + b)
            };
            let dt = 2.0 * l / NT as f64;
            let dth = 2.0 * std::f64::consts::PI / NTH as f64;
            for _ in 0..4 {
                let th_fixed = bth;
                bt = golden(
                    &|t| dist2(t, th_fixed),
                    (bt - dt).max(-l),
                    (bt + dt).min(l),
                );
                let t_fixed = bt;
                bth = golden(&|th| dist2(t_fixed, th), bth - dth, bth + dth);
            }
            let p0 = surf(bt, bth);
            // outward normal of the swept tube surface at (t, theta)
            let dv = curve.deriv(bt);
            let ty = Point3::new(0.0, 1.0, dv); // d surf / dt
            let tt = Point3::new(-r * bth.sin(), 0.0, r * bth.cos()); // d surf / d theta
            let mut n = cross(tt, ty);
            if n.dot(p0 - Point3::new(0.0, bt, curve.value(bt) - r)) < 0.0 {
                n = n * (-1.0);
            }
            let n = n.normalized();
            let dist = p0.dist(x);
            let dir = (p0 - x) * (1.0 / dist);
            NearestPoint3 {
                point: p0,
                normal: n,
                residual: (dir - n).norm(),
                dist,
            }
        }
    };
    assert!(
        result.dist <= end.section.eps() * (1.0 + 1e-9),
        "3D nearest lateral distance {} exceeded section scale {}",
        result.dist,
        end.section.eps()
    );
    Ok(result)
}

fn cross(a: Point3, b: Point3) -> Point3 {
    Point3::new(
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    )
}

/// Nearest parameter of the planar graph (t, gamma(t)) to the point (y, z).
fn nearest_graph_param(curve: &GraphCurve, y: f64, z: f64) -> (f64, f64) {
    curve.nearest_param(y, z, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn narrow_rect_flat_normals() {
        let end = ProductEnd3D::new(
            GraphCurve::flat(1.0),
            CrossSection::Rect {
                eps: 0.1,
                b: -0.5,
                length: 1.0,
            },
        )
        .unwrap();
        // near the top face
        let np = nearest_lateral_point_3d(&end, Point3::new(0.1, 0.2, -0.01)).unwrap();
        assert_relative_eq!(np.dist, 0.01, epsilon = 1e-12);
        assert!(np.residual < 1e-12);
        // near the front face
        let np = nearest_lateral_point_3d(&end, Point3::new(0.49, 0.2, -0.05)).unwrap();
        assert_relative_eq!(np.dist, 0.01, epsilon = 1e-12);
        assert!(np.residual < 1e-12);
        assert!(np.dist <= 0.1);
    }

    #[test]
    fn thin_disk_flat_radial() {
        let end = ProductEnd3D::new(GraphCurve::flat(1.0), CrossSection::Disk { eps: 0.1 }).unwrap();
        // interior point offset radially in the section plane
        let x = Point3::new(0.02, 0.3, -0.05 + 0.01);
        let np = nearest_lateral_point_3d(&end, x).unwrap();
        let r = (0.02f64 * 0.02 + 0.01 * 0.01).sqrt();
        assert_relative_eq!(np.dist, 0.05 - r, epsilon = 1e-6);
        assert!(np.residual < 1e-4, "residual {}", np.residual);
    }

    #[test]
    fn curved_disk_distance_below_eps() {
        let curve = GraphCurve::sine(0.04, 2.0, 1.0, 65).unwrap();
        let end = ProductEnd3D::new(curve, CrossSection::Disk { eps: 0.1 }).unwrap();
        for i in 0..20 {
            let t = -0.8 + 1.6 * i as f64 / 19.0;
            let g = end.curve().value(t);
            let x = Point3::new(0.01, t, g - 0.05 + 0.02);
            if end.contains(x) {
                let np = nearest_lateral_point_3d(&end, x).unwrap();
                assert!(np.dist <= 0.1);
                assert!(np.residual < 1e-2, "residual {}", np.residual);
            }
        }
    }
}
