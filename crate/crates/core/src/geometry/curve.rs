//! C2 graph curves stored as natural cubic splines.

use crate::error::{Error, Result};

/// A single-valued C2 graph `t -> gamma(t)` over the interval (-L, L),
/// stored piecewise-cubic on a knot grid. The graph map is
/// `eta(t) = (t, gamma(t))`; single-valuedness makes `eta` injective.
#[derive(Debug, Clone)]
pub struct GraphCurve {
    /// Knot abscissae, strictly increasing, spanning [-L, L].
    knots: Vec<f64>,
    /// Per-piece cubic coefficients: value = c0 + c1 dt + c2 dt^2 + c3 dt^3
    /// with dt = t - knots[i].
    coeffs: Vec<[f64; 4]>,
    half_length: f64,
    amplitude: f64,
}

impl GraphCurve {
    /// The flat graph gamma = 0 on (-L, L).
    pub fn flat(half_length: f64) -> Self {
        Self::constant(0.0, half_length)
    }

    /// A constant graph gamma = c on (-L, L).
    pub fn constant(c: f64, half_length: f64) -> Self {
        assert!(half_length > 0.0, "curve interval must be nonempty");
        GraphCurve {
            knots: vec![-half_length, half_length],
            coeffs: vec![[c, 0.0, 0.0, 0.0]],
            half_length,
            amplitude: c.abs(),
        }
    }

    /// Natural cubic spline through `(ts, ys)`; knots must be strictly
    /// increasing and symmetric enough to define the interval as
    /// (ts[0], ts[last]) with L = ts[last].
    pub fn from_samples(ts: &[f64], ys: &[f64]) -> Result<Self> {
        Self::from_samples_with_end_curvature(ts, ys, 0.0, 0.0)
    }

    /// Cubic spline with prescribed second derivatives at the two interval
    /// ends; avoids the O(h^2) boundary layer of natural end conditions when
    /// fitting a known curve.
    pub fn from_samples_with_end_curvature(
        ts: &[f64],
        ys: &[f64],
        m_first: f64,
        m_last: f64,
    ) -> Result<Self> {
        if ts.len() != ys.len() || ts.len() < 2 {
            return Err(Error::Geometry(
                "spline needs at least two samples with matching lengths".into(),
            ));
        }
        for w in ts.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::Geometry("spline knots must be increasing".into()));
            }
        }
        let n = ts.len();
        let mut m = vec![0.0; n];
        m[0] = m_first;
        m[n - 1] = m_last;
        if n > 2 {
            let mut sub = vec![0.0; n];
            let mut diag = vec![0.0; n];
            let mut sup = vec![0.0; n];
            let mut rhs = vec![0.0; n];
            for i in 1..n - 1 {
                let h0 = ts[i] - ts[i - 1];
                let h1 = ts[i + 1] - ts[i];
                sub[i] = h0;
                diag[i] = 2.0 * (h0 + h1);
                sup[i] = h1;
                rhs[i] = 6.0 * ((ys[i + 1] - ys[i]) / h1 - (ys[i] - ys[i - 1]) / h0);
            }
            rhs[1] -= sub[1] * m[0];
            rhs[n - 2] -= sup[n - 2] * m[n - 1];
            // Thomas sweep over the interior unknowns.
            for i in 2..n - 1 {
                let w = sub[i] / diag[i - 1];
                diag[i] -= w * sup[i - 1];
                rhs[i] -= w * rhs[i - 1];
            }
            m[n - 2] = rhs[n - 2] / diag[n - 2];
            for i in (1..n - 2).rev() {
                m[i] = (rhs[i] - sup[i] * m[i + 1]) / diag[i];
            }
        }
        let mut coeffs = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            let h = ts[i + 1] - ts[i];
            let c0 = ys[i];
            let c2 = m[i] / 2.0;
            let c3 = (m[i + 1] - m[i]) / (6.0 * h);
            let c1 = (ys[i + 1] - ys[i]) / h - h * (2.0 * m[i] + m[i + 1]) / 6.0;
            coeffs.push([c0, c1, c2, c3]);
        }
        let mut curve = GraphCurve {
            knots: ts.to_vec(),
            coeffs,
            half_length: ts[n - 1].abs().max(ts[0].abs()),
            amplitude: 0.0,
        };
        curve.amplitude = curve.measure_amplitude();
        Ok(curve)
    }

    /// Spline fit of `a sin(omega t)` on (-L, L) with `n_knots` knots and the
    /// exact end curvatures.
    pub fn sine(amplitude: f64, omega: f64, half_length: f64, n_knots: usize) -> Result<Self> {
        let n = n_knots.max(9);
        let ts: Vec<f64> = (0..n)
            .map(|i| -half_length + 2.0 * half_length * i as f64 / (n - 1) as f64)
            .collect();
        let ys: Vec<f64> = ts.iter().map(|&t| amplitude * (omega * t).sin()).collect();
        let m = |t: f64| -amplitude * omega * omega * (omega * t).sin();
        Self::from_samples_with_end_curvature(&ts, &ys, m(ts[0]), m(ts[n - 1]))
    }

    fn piece(&self, t: f64) -> (usize, f64) {
        let idx = match self
            .knots
            .binary_search_by(|k| k.partial_cmp(&t).expect("NaN knot"))
        {
            Ok(i) => i.min(self.coeffs.len() - 1),
            Err(i) => i.saturating_sub(1).min(self.coeffs.len() - 1),
        };
        (idx, t - self.knots[idx])
    }

    /// gamma(t).
    pub fn value(&self, t: f64) -> f64 {
        let (i, dt) = self.piece(t);
        let c = self.coeffs[i];
        c[0] + dt * (c[1] + dt * (c[2] + dt * c[3]))
    }

    /// gamma'(t).
    pub fn deriv(&self, t: f64) -> f64 {
        let (i, dt) = self.piece(t);
        let c = self.coeffs[i];
        c[1] + dt * (2.0 * c[2] + dt * 3.0 * c[3])
    }

    /// gamma''(t).
    pub fn deriv2(&self, t: f64) -> f64 {
        let (i, dt) = self.piece(t);
        let c = self.coeffs[i];
        2.0 * c[2] + 6.0 * c[3] * dt
    }

    /// Signed curvature of the graph, `gamma'' / (1 + gamma'^2)^(3/2)`.
    pub fn curvature(&self, t: f64) -> f64 {
        let d = self.deriv(t);
        self.deriv2(t) / (1.0 + d * d).powf(1.5)
    }

    /// Amplitude bound `A_gamma = max |gamma|`, measured on a dense grid plus
    /// knot values (exact for the polynomial pieces up to grid resolution).
    fn measure_amplitude(&self) -> f64 {
        let mut amp: f64 = 0.0;
        let n = 64 * self.coeffs.len().max(1);
        for i in 0..=n {
            let t = -self.half_length + 2.0 * self.half_length * i as f64 / n as f64;
            amp = amp.max(self.value(t).abs());
        }
        amp
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// Interval half-length L.
    pub fn half_length(&self) -> f64 {
        self.half_length
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// Nearest parameter of the offset graph `(t, gamma(t) + y_offset)` to
    /// the point `(px, py)`, with the attained distance. A 256-sample seed
    /// grid brackets the minimum, golden section shrinks it, and a few
    /// safeguarded Newton steps on the stationarity equation polish the root
    /// to machine precision.
    pub fn nearest_param(&self, px: f64, py: f64, y_offset: f64) -> (f64, f64) {
        let l = self.half_length;
        let dist2 = |t: f64| {
            let dx = t - px;
            let dy = self.value(t) + y_offset - py;
            dx * dx + dy * dy
        };
        const SEEDS: usize = 256;
        let mut best_t = -l;
        let mut best = dist2(-l);
        for i in 0..=SEEDS {
            let t = -l + 2.0 * l * i as f64 / SEEDS as f64;
            let d = dist2(t);
            if d < best {
                best = d;
                best_t = t;
            }
        }
        let step = 2.0 * l / SEEDS as f64;
        let lo = (best_t - step).max(-l);
        let hi = (best_t + step).min(l);
        let (mut a, mut b) = (lo, hi);
        let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
        let mut c = b - inv_phi * (b - a);
        let mut d = a + inv_phi * (b - a);
        let (mut fc, mut fd) = (dist2(c), dist2(d));
        for _ in 0..80 {
            if fc < fd {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = dist2(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = dist2(d);
            }
        }
        let mut t = 0.5 * (a + b);
        // Newton polish of g(t) = (t - px) + (gamma + off - py) gamma' = 0,
        // kept inside the seed bracket.
        if t > lo && t < hi {
            for _ in 0..8 {
                let dy = self.value(t) + y_offset - py;
                let dv = self.deriv(t);
                let g = (t - px) + dy * dv;
                let gp = 1.0 + dv * dv + dy * self.deriv2(t);
                if gp <= 0.0 {
                    break;
                }
                let t_next = t - g / gp;
                if !(lo..=hi).contains(&t_next) {
                    break;
                }
                let moved = (t_next - t).abs();
                t = t_next;
                if moved < 1e-16 * (1.0 + l) {
                    break;
                }
            }
        }
        if dist2(t) > best {
            t = best_t;
        }
        (t, dist2(t).sqrt())
    }

    /// Maximum jump in value/slope/second derivative across interior knots;
    /// zero (to roundoff) certifies C2 continuity of the stored pieces.
    pub fn continuity_defect(&self) -> f64 {
        let mut defect: f64 = 0.0;
        for i in 1..self.coeffs.len() {
            let t = self.knots[i];
            let left = &self.coeffs[i - 1];
            let h = t - self.knots[i - 1];
            let val_l = left[0] + h * (left[1] + h * (left[2] + h * left[3]));
            let der_l = left[1] + h * (2.0 * left[2] + 3.0 * h * left[3]);
            let d2_l = 2.0 * left[2] + 6.0 * left[3] * h;
            let right = &self.coeffs[i];
            defect = defect
                .max((val_l - right[0]).abs())
                .max((der_l - right[1]).abs())
                .max((d2_l - 2.0 * right[2]).abs());
        }
        defect
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn flat_curve_is_zero() {
        let c = GraphCurve::flat(1.0);
        assert_eq!(c.value(0.3), 0.0);
        assert_eq!(c.deriv(0.3), 0.0);
        assert_eq!(c.amplitude(), 0.0);
    }

    #[test]
    fn spline_interpolates_samples() {
        let ts: Vec<f64> = (0..21).map(|i| -1.0 + 0.1 * i as f64).collect();
        let ys: Vec<f64> = ts.iter().map(|&t| 0.05 * t.sin()).collect();
        let c = GraphCurve::from_samples(&ts, &ys).unwrap();
        for (t, y) in ts.iter().zip(ys.iter()) {
            assert_relative_eq!(c.value(*t), *y, epsilon = 1e-14);
        }
        assert!(c.continuity_defect() < 1e-12);
    }

    #[test]
    fn sine_spline_tracks_sine() {
        let c = GraphCurve::sine(0.05, 1.0, 1.0, 65).unwrap();
        for i in 0..100 {
            let t = -0.99 + 0.02 * i as f64;
            assert_relative_eq!(c.value(t), 0.05 * t.sin(), epsilon = 1e-8);
            assert_relative_eq!(c.deriv(t), 0.05 * t.cos(), epsilon = 1e-5);
        }
        assert_relative_eq!(c.amplitude(), 0.05 * (1.0f64).sin(), epsilon = 1e-6);
    }

    #[test]
    fn decreasing_knots_rejected() {
        assert!(GraphCurve::from_samples(&[0.0, 0.0], &[1.0, 2.0]).is_err());
    }
}
