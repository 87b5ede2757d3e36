//! Quadrature grids for the continuum axes of the model.
//!
//! Frequency and radial wave-vector axes use composite Gauss-Legendre rules:
//! the axis is split into uniform panels with a fixed-order rule on each
//! panel, so narrow kernel ridges are resolved everywhere while the measure
//! stays positive and exact for piecewise polynomials. Azimuth uses the
//! periodic rectangle rule, time and near-field radius use trapezoid weights.

use crate::error::{Error, Result};

/// Points per panel of the composite Gauss-Legendre rules.
const GL_PANEL_ORDER: usize = 16;

/// Which physical axis a grid discretizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisKind {
    /// Angular frequency [rad/s].
    Frequency,
    /// Radial transverse wave-vector magnitude [1/m].
    RadialWavevector,
    /// Azimuthal angle [rad], periodic.
    Azimuth,
    /// Time [s].
    Time,
    /// Near-field radius [m], measure r dr.
    Radius,
}

impl AxisKind {
    pub fn label(&self) -> &'static str {
        match self {
            AxisKind::Frequency => "frequency",
            AxisKind::RadialWavevector => "radial_wavevector",
            AxisKind::Azimuth => "azimuth",
            AxisKind::Time => "time",
            AxisKind::Radius => "radius",
        }
    }
}

/// Nodes and positive weights for one axis.
///
/// Nodes are strictly increasing. For `Radius` the weights already include
/// the r dr measure; for every other axis they represent plain dx.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub axis_kind: AxisKind,
}

impl QuadratureGrid {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrates sampled values against the grid weights.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        self.nodes
            .iter()
            .zip(values)
            .zip(&self.weights)
            .map(|((_, v), w)| v * w)
            .sum()
    }

    fn check(self) -> Result<Self> {
        debug_assert!(self.nodes.len() == self.weights.len());
        for pair in self.nodes.windows(2) {
            if pair[1] <= pair[0] {
                return Err(Error::DegenerateRange {
                    axis: self.axis_kind.label().to_string(),
                    lo: pair[0],
                    hi: pair[1],
                });
            }
        }
        if self.weights.iter().any(|&w| w <= 0.0) {
            return Err(Error::InvalidValue {
                key: "weights".into(),
                reason: "non-positive quadrature weight".into(),
            });
        }
        Ok(self)
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1].
///
/// Newton iteration on the Legendre recurrence; accurate to machine
/// precision for the orders used here.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess for the i-th root (descending).
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and derivative via the three-term recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Builds a quadrature grid of roughly `resolution` points on `[lo, hi]`.
///
/// Frequency and radial axes get composite Gauss-Legendre rules (the point
/// count is rounded up to a multiple of the panel order). Azimuth gets the
/// periodic rectangle rule with the right endpoint excluded; time and radius
/// get uniform trapezoid rules, the radius weights carrying the r dr measure.
pub fn build_grid(axis_kind: AxisKind, range: (f64, f64), resolution: usize) -> Result<QuadratureGrid> {
    let (lo, hi) = range;
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::DegenerateRange {
            axis: axis_kind.label().to_string(),
            lo,
            hi,
        });
    }
    if resolution < 8 {
        return Err(Error::InvalidValue {
            key: "resolution".into(),
            reason: format!("{resolution} < 8"),
        });
    }

    let grid = match axis_kind {
        AxisKind::Frequency | AxisKind::RadialWavevector => {
            let panels = resolution.div_ceil(GL_PANEL_ORDER);
            let (xs, ws) = gauss_legendre(GL_PANEL_ORDER);
            let panel_width = (hi - lo) / panels as f64;
            let mut nodes = Vec::with_capacity(panels * GL_PANEL_ORDER);
            let mut weights = Vec::with_capacity(panels * GL_PANEL_ORDER);
            for p in 0..panels {
                let a = lo + p as f64 * panel_width;
                let half = 0.5 * panel_width;
                let mid = a + half;
                for (x, w) in xs.iter().zip(&ws) {
                    nodes.push(mid + half * x);
                    weights.push(half * w);
                }
            }
            QuadratureGrid { nodes, weights, axis_kind }
        }
        AxisKind::Azimuth => {
            let h = (hi - lo) / resolution as f64;
            let nodes = (0..resolution).map(|i| lo + i as f64 * h).collect();
            let weights = vec![h; resolution];
            QuadratureGrid { nodes, weights, axis_kind }
        }
        AxisKind::Time => {
            let h = (hi - lo) / (resolution - 1) as f64;
            let nodes: Vec<f64> = (0..resolution).map(|i| lo + i as f64 * h).collect();
            let mut weights = vec![h; resolution];
            weights[0] = 0.5 * h;
            weights[resolution - 1] = 0.5 * h;
            QuadratureGrid { nodes, weights, axis_kind }
        }
        AxisKind::Radius => {
            // Trapezoid in r with the polar measure folded into the weights.
            // The r = 0 node would get zero weight, so the grid starts half a
            // step in when lo == 0.
            let h = (hi - lo) / resolution as f64;
            let start = if lo == 0.0 { lo + 0.5 * h } else { lo };
            let h2 = (hi - start) / (resolution - 1) as f64;
            let nodes: Vec<f64> = (0..resolution).map(|i| start + i as f64 * h2).collect();
            let weights = nodes
                .iter()
                .enumerate()
                .map(|(i, &r)| {
                    let base = if i == 0 || i == resolution - 1 { 0.5 * h2 } else { h2 };
                    // account for the [lo, start] strip at the inner edge
                    let extra = if i == 0 { start - lo } else { 0.0 };
                    (base + extra) * r
                })
                .collect();
            QuadratureGrid { nodes, weights, axis_kind }
        }
    };
    grid.check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gl_nodes_integrate_polynomials_exactly() {
        for n in [4usize, 8, 16, 32] {
            let (xs, ws) = gauss_legendre(n);
            // degree 2n-1 monomial over [-1,1]
            for deg in 0..(2 * n) {
                let num: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let exact = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!(
                    (num - exact).abs() < 1e-13,
                    "n={n} deg={deg}: {num} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn frequency_grid_integrates_constant_to_range_length() {
        let g = build_grid(AxisKind::Frequency, (2.0e15, 3.4e15), 256).unwrap();
        let total: f64 = g.weights.iter().sum();
        assert_relative_eq!(total, 1.4e15, max_relative = 1e-10);
        assert_eq!(g.len(), 256);
    }

    #[test]
    fn composite_rule_integrates_smooth_gaussian() {
        // narrow feature vs panel width, the regime the kernels live in
        let g = build_grid(AxisKind::Frequency, (-1.0, 1.0), 512).unwrap();
        let sigma = 0.01;
        let vals: Vec<f64> = g.nodes.iter().map(|x| (-x * x / (2.0 * sigma * sigma)).exp()).collect();
        let num = g.integrate(&vals);
        let exact = sigma * (2.0 * std::f64::consts::PI).sqrt();
        assert_relative_eq!(num, exact, max_relative = 1e-12);
    }

    #[test]
    fn azimuth_grid_is_periodic_rectangle() {
        let two_pi = 2.0 * std::f64::consts::PI;
        let g = build_grid(AxisKind::Azimuth, (0.0, two_pi), 512).unwrap();
        assert_eq!(g.len(), 512);
        let total: f64 = g.weights.iter().sum();
        assert_relative_eq!(total, two_pi, max_relative = 1e-12);
        // right endpoint excluded
        assert!(g.nodes[511] < two_pi);
        // rectangle rule is exact for e^{i m phi} on the full circle
        for m in [1i32, 3, 7] {
            let s: f64 = g.nodes.iter().zip(&g.weights).map(|(p, w)| w * (m as f64 * p).cos()).sum();
            assert!(s.abs() < 1e-12);
        }
    }

    #[test]
    fn radius_grid_carries_polar_measure() {
        let g = build_grid(AxisKind::Radius, (0.0, 3.0e-3), 1024).unwrap();
        let total: f64 = g.weights.iter().sum();
        // integral of r dr = b^2/2, trapezoid is exact for linear integrands
        assert_relative_eq!(total, 0.5 * 9.0e-6, max_relative = 1e-10);
        assert!(g.nodes[0] > 0.0);
    }

    #[test]
    fn degenerate_range_is_rejected() {
        assert!(build_grid(AxisKind::Time, (1.0, 1.0), 64).is_err());
        assert!(build_grid(AxisKind::Frequency, (2.0, 1.0), 64).is_err());
        assert!(build_grid(AxisKind::Frequency, (0.0, 1.0), 4).is_err());
    }
}
