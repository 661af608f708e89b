//! Subregions of a thin end in the shifted frame, with the four tagged
//! boundary segments (left/right vertical caps, top/bottom lateral arcs).

use super::end::ProductEnd2D;
use crate::error::{Error, Result};
use crate::point::Point;

/// Localized subregion of a thin end after shifting the end left by
/// `a - eps^m` units: `x1 in (eps^m, eps^m + eps^l)`, bounded above and below
/// by the shifted lateral graphs. Boundary segments are tagged
/// `Gamma1` (left cap), `Gamma2` (right cap), `Gamma3` (top), `Gamma4`
/// (bottom); the caps are vertical of height `eps`.
#[derive(Debug, Clone)]
pub struct Subregion {
    end: ProductEnd2D,
    shift: f64,
    a: f64,
    ell: f64,
    m: f64,
    x1_lo: f64,
    x1_hi: f64,
}

/// Build the subregion with shift parameter `a` and exponents `(ell, m)`.
/// The 2D exponent constraints `ell < alpha1` and `m > 1/2` are enforced.
pub fn build_subregion(
    end: &ProductEnd2D,
    a: f64,
    ell: f64,
    m: f64,
    alpha1: f64,
) -> Result<Subregion> {
    if a <= 0.0 {
        return Err(Error::Constraint(format!("shift a must be positive, got {a}")));
    }
    if !(ell < alpha1) {
        return Err(Error::Constraint(format!(
            "exponent constraint violated: ell = {ell} must satisfy ell < alpha1 = {alpha1}"
        )));
    }
    if !(m > 0.5) {
        return Err(Error::Constraint(format!(
            "exponent constraint violated: m = {m} must satisfy m > 1/2"
        )));
    }
    let eps = end.eps();
    let x1_lo = eps.powf(m);
    let x1_hi = x1_lo + eps.powf(ell);
    // In the original frame the subregion occupies (a, a + eps^l), which must
    // sit inside the curve interval.
    let l = end.curve().half_length();
    if a + eps.powf(ell) >= l || a <= -l {
        return Err(Error::Constraint(format!(
            "subregion (a, a + eps^l) = ({a}, {}) leaves the interval (-{l}, {l})",
            a + eps.powf(ell)
        )));
    }
    Ok(Subregion {
        end: end.clone(),
        shift: a - x1_lo,
        a,
        ell,
        m,
        x1_lo,
        x1_hi,
    })
}

impl Subregion {
    pub fn eps(&self) -> f64 {
        self.end.eps()
    }

    pub fn ell(&self) -> f64 {
        self.ell
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn shift_a(&self) -> f64 {
        self.a
    }

    /// x1-range (eps^m, eps^m + eps^l) of the shifted frame.
    pub fn x1_range(&self) -> (f64, f64) {
        (self.x1_lo, self.x1_hi)
    }

    /// The parent end (unshifted frame).
    pub fn end(&self) -> &ProductEnd2D {
        &self.end
    }

    /// Shifted top graph: `gamma(x1 + a - eps^m)`.
    pub fn top(&self, x1: f64) -> f64 {
        self.end.curve().value(x1 + self.shift)
    }

    /// Shifted bottom graph.
    pub fn bottom(&self, x1: f64) -> f64 {
        self.top(x1) - self.eps()
    }

    /// Slope of the shifted graphs at x1.
    pub fn slope(&self, x1: f64) -> f64 {
        self.end.curve().deriv(x1 + self.shift)
    }

    /// Map a shifted-frame point back to the parent end's frame.
    pub fn to_end_frame(&self, p: Point) -> Point {
        Point::new(p.x + self.shift, p.y)
    }

    /// Segment endpoints of the four tagged boundary pieces, in the shifted
    /// frame. Gamma1/Gamma2 are the vertical caps, Gamma3/Gamma4 follow the
    /// shifted curve.
    pub fn cap_left(&self) -> (Point, Point) {
        let g = self.top(self.x1_lo);
        (
            Point::new(self.x1_lo, g - self.eps()),
            Point::new(self.x1_lo, g),
        )
    }

    pub fn cap_right(&self) -> (Point, Point) {
        let g = self.top(self.x1_hi);
        (
            Point::new(self.x1_hi, g - self.eps()),
            Point::new(self.x1_hi, g),
        )
    }

    /// Exact area: every vertical section has length eps, so
    /// `|D_eps| = eps^(l+1)`.
    pub fn area(&self) -> f64 {
        self.eps() * (self.x1_hi - self.x1_lo)
    }

    /// Strict interior test in the shifted frame.
    pub fn contains(&self, p: Point) -> bool {
        if p.x <= self.x1_lo || p.x >= self.x1_hi {
            return false;
        }
        let top = self.top(p.x);
        p.y < top && p.y > top - self.eps()
    }

    /// Boundary polygon vertices (counterclockwise), sampling the lateral
    /// arcs with `n_lateral` points each; used for decay certificates.
    pub fn polygon_vertices(&self, n_lateral: usize) -> Vec<Point> {
        let n = n_lateral.max(2);
        let mut verts = Vec::with_capacity(2 * n + 2);
        // bottom, left to right
        for i in 0..n {
            let x1 = self.x1_lo + (self.x1_hi - self.x1_lo) * i as f64 / (n - 1) as f64;
            verts.push(Point::new(x1, self.bottom(x1)));
        }
        // top, right to left
        for i in 0..n {
            let x1 = self.x1_hi - (self.x1_hi - self.x1_lo) * i as f64 / (n - 1) as f64;
            verts.push(Point::new(x1, self.top(x1)));
        }
        verts
    }

    /// Centroid of the subregion (the default anchor point), computed from
    /// the exact vertical-fiber decomposition.
    pub fn centroid(&self) -> Point {
        // x-centroid: fibers all have mass eps -> mean of x1 over the range;
        // y-centroid: fiber midpoint gamma(x1) - eps/2 averaged over x1.
        let n = 256;
        let mut y_acc = 0.0;
        for i in 0..n {
            let x1 = self.x1_lo + (self.x1_hi - self.x1_lo) * (i as f64 + 0.5) / n as f64;
            y_acc += self.top(x1) - 0.5 * self.eps();
        }
        Point::new(0.5 * (self.x1_lo + self.x1_hi), y_acc / n as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{build_thin_end_2d, GraphCurve};
    use approx::assert_relative_eq;

    fn flat_end(eps: f64) -> ProductEnd2D {
        build_thin_end_2d(GraphCurve::flat(1.5), eps).unwrap()
    }

    #[test]
    fn default_exponents_range() {
        let eps = 0.1f64;
        let sub = build_subregion(&flat_end(eps), 1.0, 7.0 / 9.0, 7.0 / 9.0, 5.0 / 6.0).unwrap();
        let (lo, hi) = sub.x1_range();
        assert_relative_eq!(lo, eps.powf(7.0 / 9.0), epsilon = 1e-15);
        assert_relative_eq!(hi, eps.powf(7.0 / 9.0) + eps.powf(7.0 / 9.0), epsilon = 1e-15);
        let (b, t) = sub.cap_left();
        assert_relative_eq!(t.y - b.y, eps, epsilon = 1e-15);
    }

    #[test]
    fn ell_at_alpha1_rejected() {
        let err = build_subregion(&flat_end(0.1), 1.0, 0.9, 7.0 / 9.0, 5.0 / 6.0);
        match err {
            Err(Error::Constraint(_)) => {}
            other => panic!("expected constraint error, got {other:?}"),
        }
    }

    #[test]
    fn flat_area_is_power() {
        let eps = 0.05f64;
        let sub = build_subregion(&flat_end(eps), 1.0, 7.0 / 9.0, 7.0 / 9.0, 5.0 / 6.0).unwrap();
        assert_relative_eq!(sub.area(), eps.powf(16.0 / 9.0), max_relative = 1e-13);
    }

    #[test]
    fn segment_endpoints_match_formulas() {
        // symbolic substitution of eq-level formulas at two thicknesses
        for &eps in &[0.1f64, 0.05] {
            let curve = GraphCurve::sine(0.4 * eps, 1.0, 2.0, 65).unwrap();
            let end = build_thin_end_2d(curve.clone(), eps).unwrap();
            let a = 1.0;
            let (ell, m) = (7.0 / 9.0, 7.0 / 9.0);
            let sub = build_subregion(&end, a, ell, m, 5.0 / 6.0).unwrap();
            let em = eps.powf(m);
            let el = eps.powf(ell);
            let (bl, tl) = sub.cap_left();
            assert_relative_eq!(bl.x, em, epsilon = 1e-14);
            assert_relative_eq!(tl.y, curve.value(a), epsilon = 1e-12);
            assert_relative_eq!(bl.y, curve.value(a) - eps, epsilon = 1e-12);
            let (br, tr) = sub.cap_right();
            assert_relative_eq!(br.x, em + el, epsilon = 1e-14);
            assert_relative_eq!(tr.y, curve.value(a + el), epsilon = 1e-12);
            // top/bottom arcs follow the shifted curve
            let x1 = em + 0.37 * el;
            assert_relative_eq!(sub.top(x1), curve.value(x1 + a - em), epsilon = 1e-12);
            assert_relative_eq!(
                sub.bottom(x1),
                curve.value(x1 + a - em) - eps,
                epsilon = 1e-12
            );
        }
    }
}
