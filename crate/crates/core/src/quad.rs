//! Quadrature rules: Gauss-Legendre on segments, a degree-5 seven-point
//! triangle rule, and an adaptive Gauss-Kronrod (G7, K15) integrator.

use crate::point::Point;
use crate::C64;

/// 5-point Gauss-Legendre nodes on [-1, 1].
pub const GAUSS5_NODES: [f64; 5] = [
    -0.9061798459386640,
    -0.5384693101056831,
    0.0,
    0.5384693101056831,
    0.9061798459386640,
];

/// 5-point Gauss-Legendre weights on [-1, 1].
pub const GAUSS5_WEIGHTS: [f64; 5] = [
    0.2369268850561891,
    0.4786286704993665,
    0.5688888888888889,
    0.4786286704993665,
    0.2369268850561891,
];

/// Integrate a complex function along the segment [a, b] with 5-point Gauss.
pub fn segment_quadrature(a: Point, b: Point, mut f: impl FnMut(Point) -> C64) -> C64 {
    let mid = (a + b) * 0.5;
    let half = (b - a) * 0.5;
    let len_half = half.norm();
    let mut acc = C64::new(0.0, 0.0);
    for (&t, &w) in GAUSS5_NODES.iter().zip(GAUSS5_WEIGHTS.iter()) {
        acc += w * f(mid + half * t);
    }
    acc * len_half
}

/// Quadrature points and scaled weights (summing to the segment length) on [a, b].
pub fn segment_points(a: Point, b: Point) -> Vec<(Point, f64)> {
    let mid = (a + b) * 0.5;
    let half = (b - a) * 0.5;
    let len_half = half.norm();
    GAUSS5_NODES
        .iter()
        .zip(GAUSS5_WEIGHTS.iter())
        .map(|(&t, &w)| (mid + half * t, w * len_half))
        .collect()
}

/// Seven-point degree-5 triangle rule (barycentric nodes and weights,
/// weights normalized to sum to 1).
const TRI7: [([f64; 3], f64); 7] = [
    ([1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0], 0.225),
    (
        [0.0597158717897698, 0.4701420641051151, 0.4701420641051151],
        0.1323941527885062,
    ),
    (
        [0.4701420641051151, 0.0597158717897698, 0.4701420641051151],
        0.1323941527885062,
    ),
    (
        [0.4701420641051151, 0.4701420641051151, 0.0597158717897698],
        0.1323941527885062,
    ),
    (
        [0.7974269853530873, 0.1012865073234563, 0.1012865073234563],
        0.1259391805448271,
    ),
    (
        [0.1012865073234563, 0.7974269853530873, 0.1012865073234563],
        0.1259391805448271,
    ),
    (
        [0.1012865073234563, 0.1012865073234563, 0.7974269853530873],
        0.1259391805448271,
    ),
];

/// Signed area of the triangle (a, b, c).
pub fn triangle_area(a: Point, b: Point, c: Point) -> f64 {
    0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y))
}

/// Integrate a complex function over one triangle with the 7-point rule.
pub fn triangle_quadrature(a: Point, b: Point, c: Point, mut f: impl FnMut(Point) -> C64) -> C64 {
    let area = triangle_area(a, b, c).abs();
    let mut acc = C64::new(0.0, 0.0);
    for (bary, w) in TRI7.iter() {
        let p = a * bary[0] + b * bary[1] + c * bary[2];
        acc += *w * f(p);
    }
    acc * area
}

/// Quadrature points and weights (summing to the triangle area).
pub fn triangle_points(a: Point, b: Point, c: Point) -> Vec<(Point, f64)> {
    let area = triangle_area(a, b, c).abs();
    TRI7.iter()
        .map(|(bary, w)| (a * bary[0] + b * bary[1] + c * bary[2], w * area))
        .collect()
}

// Gauss 7 / Kronrod 15 node-weight pairs on [-1, 1].
const KRONROD_NODES: [f64; 15] = [
    -0.9914553711208126,
    -0.9491079123427585,
    -0.8648644233597691,
    -0.7415311855993944,
    -0.5860872354676911,
    -0.4058451513773972,
    -0.2077849550078985,
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993944,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126,
];

const KRONROD_WEIGHTS: [f64; 15] = [
    0.0229353220105292,
    0.0630920926299786,
    0.1047900103222502,
    0.1406532597155259,
    0.1690047266392679,
    0.1903505780647854,
    0.2044329400752989,
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299786,
    0.0229353220105292,
];

const GAUSS7_WEIGHTS: [f64; 7] = [
    0.1294849661688697,
    0.2797053914892767,
    0.3818300505051189,
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892767,
    0.1294849661688697,
];

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut kron = 0.0;
    let mut gauss = 0.0;
    for (i, (&x, &wk)) in KRONROD_NODES.iter().zip(KRONROD_WEIGHTS.iter()).enumerate() {
        let v = f(mid + half * x);
        kron += wk * v;
        if i % 2 == 1 {
            gauss += GAUSS7_WEIGHTS[i / 2] * v;
        }
    }
    (kron * half, (kron - gauss).abs() * half.abs())
}

/// Adaptive Gauss-Kronrod integration of `f` on [a, b] to absolute/relative
/// tolerance `tol`, with interval bisection up to `max_depth`.
pub fn adaptive_gauss_kronrod(
    mut f: impl FnMut(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> f64 {
    fn recurse(
        f: &mut impl FnMut(f64) -> f64,
        a: f64,
        b: f64,
        tol: f64,
        depth: u32,
        whole: f64,
    ) -> f64 {
        let (value, err) = gk15(f, a, b);
        if depth == 0 || err <= tol * (1.0 + whole.abs()) {
            return value;
        }
        let mid = 0.5 * (a + b);
        recurse(f, a, mid, tol * 0.5, depth - 1, whole)
            + recurse(f, mid, b, tol * 0.5, depth - 1, whole)
    }
    let (first, _) = gk15(&mut f, a, b);
    recurse(&mut f, a, b, tol, max_depth, first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gauss5_integrates_degree_nine() {
        // int_0^1 x^9 dx = 1/10 along a horizontal segment
        let v = segment_quadrature(Point::new(0.0, 0.0), Point::new(1.0, 0.0), |p| {
            C64::new(p.x.powi(9), 0.0)
        });
        assert_relative_eq!(v.re, 0.1, max_relative = 1e-13);
    }

    #[test]
    fn triangle_rule_exact_degree_five() {
        // int over the unit triangle of x^2 y^3 = B(3,5)/4 = 1/420
        let v = triangle_quadrature(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.0, 1.0),
            |p| C64::new(p.x * p.x * p.y.powi(3), 0.0),
        );
        assert_relative_eq!(v.re, 1.0 / 420.0, max_relative = 1e-12);
    }

    #[test]
    fn gk_integrates_oscillatory() {
        let v = adaptive_gauss_kronrod(|x| (10.0 * x).sin(), 0.0, 1.0, 1e-12, 40);
        assert_relative_eq!(v, (1.0 - (10.0f64).cos()) / 10.0, max_relative = 1e-11);
    }
}
