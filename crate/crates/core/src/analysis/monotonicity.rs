//! Monotonicity of F_{2α}: the Turán-type margin, the chain of inequalities
//! below it, and grid scans.

use crate::error::{invalid, Error, Result};
use crate::similarity::f2_alpha;
use crate::special_functions::{gamma, reciprocal_gamma, wright_scaled, Scaled, SeriesConfig, WrightArgs};
use serde::Serialize;

fn check(x: f64, alpha: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(invalid("x", format!("must be finite and > 0, got {x}")));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid("alpha", format!("must lie in (0, 1], got {alpha}")));
    }
    Ok(())
}

fn w(x: f64, alpha: f64, beta: f64, cfg: &SeriesConfig) -> Result<Scaled> {
    wright_scaled(&WrightArgs::new(-x, -alpha / 2.0, beta)?, cfg)
}

/// The three factors of the margin: M_{α/2}(x), W(-x; -α/2; 1), W(-x; -α/2; 1 - α).
fn factors(x: f64, alpha: f64) -> Result<[Scaled; 3]> {
    check(x, alpha)?;
    let cfg = SeriesConfig::default();
    Ok([
        w(x, alpha, 1.0 - alpha / 2.0, &cfg)?,
        w(x, alpha, 1.0, &cfg)?,
        w(x, alpha, 1.0 - alpha, &cfg)?,
    ])
}

/// 1 - W(·;1) W(·;1-α) / M² with the common scale factors cancelled.
fn relative_from(f: &[Scaled; 3]) -> f64 {
    let [m, a, b] = *f;
    let q = a.mantissa * b.mantissa / (m.mantissa * m.mantissa);
    let ls = a.log_scale + b.log_scale - 2.0 * m.log_scale;
    if ls == 0.0 || q == 0.0 {
        return 1.0 - q;
    }
    1.0 - q.signum() * (q.abs().ln() + ls).exp()
}

/// [M_{α/2}(x)]² - W(-x; -α/2; 1) · W(-x; -α/2; 1 - α).
///
/// Positive exactly where F_{2α} is increasing. Underflows to 0 for large x;
/// see [`turan_relative_margin`] for the scale-free form.
pub fn turan_margin(x: f64, alpha: f64) -> Result<f64> {
    let f = factors(x, alpha)?;
    let m = f[0].value();
    Ok(m * m * relative_from(&f))
}

/// The Turán margin divided by M², computed without forming either factor.
pub fn turan_relative_margin(x: f64, alpha: f64) -> Result<f64> {
    Ok(relative_from(&factors(x, alpha)?))
}

/// Margins of Γ(1-α) W(-x;-α/2;1-α) > Γ(1-α/2) M_{α/2}(x) > W(-x;-α/2;1) > 0,
/// returned as (m1, m2, m3) with m3 = W(-x;-α/2;1). Needs α < 1.
pub fn chain_inequality_margins(x: f64, alpha: f64) -> Result<(f64, f64, f64)> {
    if alpha >= 1.0 {
        return Err(invalid("alpha", "chain inequality needs alpha < 1 (Γ(1-α) has a pole)"));
    }
    let [m, w1, wa] = factors(x, alpha)?;
    let gm = gamma(1.0 - alpha / 2.0)? * m.value();
    let ga = gamma(1.0 - alpha)? * wa.value();
    let w1 = w1.value();
    Ok((ga - gm, gm - w1, w1))
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub x: (f64, f64),
    pub values: (f64, f64),
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub alpha: f64,
    pub grid: Vec<f64>,
    /// F_{2α} on the grid
    pub values: Vec<f64>,
    /// no adjacent decrease beyond 1e-13·|value|
    pub monotone: bool,
    pub first_violation: Option<Violation>,
    /// Turán margins on the grid
    pub margins: Vec<f64>,
    /// margins / M²
    pub relative_margins: Vec<f64>,
    /// |F(first) - 1/Γ(1-α/2)|
    pub origin_gap: f64,
    /// F(last) / F(first); growth without bound is expected but slow, so
    /// this is reported, not gated
    pub growth_ratio: f64,
    /// set when an evaluation failed and the scan stopped early
    pub truncated_at: Option<f64>,
}

impl ScanReport {
    /// Sign pattern of the margins agrees with the monotone verdict.
    pub fn consistent(&self) -> bool {
        let all_positive = self.relative_margins.iter().all(|&m| m > -1e-12);
        all_positive == self.monotone
    }

    pub fn min_relative_margin(&self) -> f64 {
        self.relative_margins.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Smallest grid point of [`f2_monotonicity_scan`].
pub const SCAN_X_MIN: f64 = 1e-3;

/// F_{2α} and the Turán margins on a log grid of `n_points` in [1e-3, x_max].
pub fn f2_monotonicity_scan(alpha: f64, x_max: f64, n_points: usize) -> Result<ScanReport> {
    f2_scan_range(alpha, SCAN_X_MIN, x_max, n_points)
}

pub fn f2_scan_range(alpha: f64, x_min: f64, x_max: f64, n_points: usize) -> Result<ScanReport> {
    if n_points < 2 {
        return Err(Error::Grid(format!("need at least 2 points, got {n_points}")));
    }
    if !(x_min > 0.0 && x_max > x_min && x_max.is_finite()) {
        return Err(invalid(
            "x_max",
            format!("need 0 < x_min < x_max, got [{x_min}, {x_max}]"),
        ));
    }
    check(x_min, alpha)?;
    let (l0, l1) = (x_min.ln(), x_max.ln());
    let full: Vec<f64> = (0..n_points)
        .map(|i| {
            if i == n_points - 1 {
                x_max
            } else {
                (l0 + (l1 - l0) * i as f64 / (n_points - 1) as f64).exp()
            }
        })
        .collect();
    let mut grid = Vec::with_capacity(n_points);
    let mut values = Vec::with_capacity(n_points);
    let mut margins = Vec::with_capacity(n_points);
    let mut relative_margins = Vec::with_capacity(n_points);
    let mut truncated_at = None;
    for &x in &full {
        let step = f2_alpha(x, alpha).and_then(|v| {
            let f = factors(x, alpha)?;
            let m = f[0].value();
            let rel = relative_from(&f);
            Ok((v, m * m * rel, rel))
        });
        match step {
            Ok((v, m, r)) => {
                grid.push(x);
                values.push(v);
                margins.push(m);
                relative_margins.push(r);
            }
            Err(Error::Underflow { .. }) | Err(Error::PrecisionLoss { .. }) | Err(Error::QuadratureFailure { .. }) => {
                truncated_at = Some(x);
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if values.is_empty() {
        return Err(Error::Underflow { x: x_min });
    }
    let first_violation = values
        .windows(2)
        .position(|w| w[1] - w[0] < -1e-13 * w[0].abs())
        .map(|i| Violation {
            x: (grid[i], grid[i + 1]),
            values: (values[i], values[i + 1]),
        });
    Ok(ScanReport {
        alpha,
        origin_gap: (values[0] - reciprocal_gamma(1.0 - alpha / 2.0)).abs(),
        growth_ratio: values[values.len() - 1] / values[0],
        monotone: first_violation.is_none(),
        first_violation,
        grid,
        values,
        margins,
        relative_margins,
        truncated_at,
    })
}
