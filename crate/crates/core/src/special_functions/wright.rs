//! Wright function W(z; ρ; β) = Σ zⁿ / (n! Γ(ρn + β)) for ρ ∈ (-1, 0].
//!
//! Two routes:
//!
//! * the defining series, summed in double-double arithmetic with the
//!   reciprocal Gamma evaluated to the same precision;
//! * for z = -x < 0 beyond a cancellation threshold, the integral along the
//!   steepest-descent Hankel contour,
//!
//!   W(-x; -ν; β) = (1/π) ∫₀^π e^{Λφ(θ)} (Λr)^{1-β} [ (r'/r) sin((1-β)θ) + cos((1-β)θ) ] dθ,
//!
//!   with Λ = x^{1/(1-ν)}, r(θ) = (sin νθ / sin θ)^{1/(1-ν)} and
//!   φ(θ) = -r sin((1-ν)θ) / sin νθ. φ attains its maximum -B at θ = 0, where
//!   B = (1-ν) ν^{ν/(1-ν)}, so the integral is returned with the factor
//!   e^{-ΛB} split off. That keeps ratios of Wright values finite long after
//!   the values themselves underflow.
//!
//! The series for negative z alternates in blocks; Σ|terms| grows like e^{g}
//! while W itself decays like e^{-g}, g = ΛB, so the relative cancellation is
//! about e^{2g}. Double-double absorbs that comfortably for g <= 4, which is
//! where the route switches.

use super::dd::Dd;
use super::gamma::{ln_gamma_positive, reciprocal_gamma_dd};
use super::quadrature;
use crate::error::{invalid, Error, Result};
use std::f64::consts::PI;

/// Bound on |z| inside which accuracy is validated against extended-precision
/// references (relative error below 1e-12 for z <= 0).
///
/// Negative arguments beyond it are still evaluated (by quadrature, with
/// relative error growing roughly like |z|^{1/(1-ν)}·1e-16); positive arguments
/// are accepted while the series cancellation stays within double-double
/// precision, and otherwise rejected with [`Error::PrecisionLoss`].
pub const WRIGHT_ACCURACY_ENVELOPE: f64 = 50.0;

/// Truncation controls for the Wright series.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesConfig {
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            tol: 1e-15,
            max_terms: 400,
        }
    }
}

impl SeriesConfig {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        let cfg = SeriesConfig { tol, max_terms };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(invalid("tol", format!("must lie in (0, 1), got {}", self.tol)));
        }
        if self.max_terms == 0 {
            return Err(invalid("max_terms", "must be at least 1"));
        }
        Ok(())
    }
}

/// Arguments of W(z; ρ; β).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WrightArgs {
    pub z: f64,
    pub rho: f64,
    pub beta: f64,
}

impl WrightArgs {
    pub fn new(z: f64, rho: f64, beta: f64) -> Result<Self> {
        let a = WrightArgs { z, rho, beta };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.z.is_finite() {
            return Err(invalid("z", format!("must be finite, got {}", self.z)));
        }
        if !self.beta.is_finite() {
            return Err(invalid("beta", format!("must be finite, got {}", self.beta)));
        }
        if !(self.rho > -1.0 && self.rho <= 0.0) {
            return Err(invalid("rho", format!("must lie in (-1, 0], got {}", self.rho)));
        }
        Ok(())
    }
}

/// A value represented as `mantissa · exp(log_scale)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Scaled {
    pub mantissa: f64,
    pub log_scale: f64,
}

impl Scaled {
    pub fn plain(v: f64) -> Scaled {
        Scaled {
            mantissa: v,
            log_scale: 0.0,
        }
    }

    pub fn value(self) -> f64 {
        if self.log_scale == 0.0 || self.mantissa == 0.0 {
            return self.mantissa;
        }
        self.mantissa.signum() * (self.mantissa.abs().ln() + self.log_scale).exp()
    }

    /// self / other, computed without forming either value.
    pub fn ratio(self, other: Scaled) -> f64 {
        let q = self.mantissa / other.mantissa;
        let ls = self.log_scale - other.log_scale;
        if ls == 0.0 || q == 0.0 || !q.is_finite() {
            return q;
        }
        q.signum() * (q.abs().ln() + ls).exp()
    }
}

/// Exponent of the growth of Σ|terms| for W(±x; -ν; ·).
pub(crate) fn cancellation_exponent(x: f64, nu: f64) -> f64 {
    if nu == 0.0 {
        return x.abs();
    }
    let p = 1.0 / (1.0 - nu);
    (1.0 - nu) * nu.powf(nu * p) * x.abs().powf(p)
}

const QUADRATURE_SWITCH: f64 = 4.0;
// Σ|terms| beyond which double-double cannot deliver 1e-12 relative accuracy
const POSITIVE_Z_LIMIT: f64 = 45.0;

struct SeriesSum {
    sum: Dd,
    err: f64,
}

fn envelope(a_abs: f64, y: Dd, rg: Dd) -> f64 {
    if y.hi >= 0.5 {
        a_abs * rg.hi.abs()
    } else {
        // |1/Γ(y)| = |Γ(1-y) sin(πy)| / π <= Γ(1-y)/π
        a_abs * (ln_gamma_positive(1.0 - y.hi)).exp() / PI
    }
}

fn series(args: &WrightArgs, cfg: &SeriesConfig) -> Result<SeriesSum> {
    let WrightArgs { z, rho, beta } = *args;
    let mut a = Dd::ONE; // zⁿ/n!
    let mut sum = Dd::ZERO;
    let mut abs_sum = 0.0;
    let mut small_run = 0;
    let mut prev_env = f64::INFINITY;
    for n in 0..cfg.max_terms {
        if n > 0 {
            a = a * z / (n as f64);
        }
        let y = Dd::product_of(rho, n as f64) + beta;
        let rg = reciprocal_gamma_dd(y);
        let term = a * rg;
        sum = sum + term;
        abs_sum += term.hi.abs();
        let env = envelope(a.hi.abs(), y, rg);
        if env <= prev_env && env < cfg.tol * sum.hi.abs() {
            small_run += 1;
        } else {
            small_run = 0;
        }
        prev_env = env;
        if small_run >= 2 {
            let err = abs_sum * ((n + 30) as f64) * 2f64.powi(-104);
            return Ok(SeriesSum { sum, err });
        }
    }
    Err(Error::NonConvergence {
        z,
        rho,
        beta,
        max_terms: cfg.max_terms,
    })
}

fn checked_series(args: &WrightArgs, cfg: &SeriesConfig) -> Result<SeriesSum> {
    let s = series(args, cfg)?;
    let v = s.sum.hi.abs();
    if s.err > f64::MIN_POSITIVE && s.err > 1e-12 * v {
        return Err(Error::PrecisionLoss {
            z: args.z,
            rho: args.rho,
            beta: args.beta,
            estimate: if v > 0.0 { s.err / v } else { f64::INFINITY },
        });
    }
    Ok(s)
}

/// Steepest-descent integral for W(-x; -ν; β), x > 0, ν ∈ (0, 1).
fn hankel(x: f64, nu: f64, beta: f64, cfg: &SeriesConfig) -> Result<Scaled> {
    let p = 1.0 / (1.0 - nu);
    let lam = x.powf(p);
    let b = (1.0 - nu) * nu.powf(nu * p);
    let one_m_beta = 1.0 - beta;
    let f = |th: f64| -> f64 {
        let s_nu = (nu * th).sin();
        let s = th.sin();
        let ratio = s_nu / s;
        let r = ratio.powf(p);
        let phi = -r * ((1.0 - nu) * th).sin() / s_nu;
        let rp_r = (nu / (nu * th).tan() - 1.0 / th.tan()) * p;
        let log_mag = lam * (phi + b) + one_m_beta * (lam * r).ln();
        let e = log_mag.exp();
        if e == 0.0 {
            return 0.0;
        }
        e * (rp_r * (one_m_beta * th).sin() + (one_m_beta * th).cos())
    };
    let w = (4.0 / lam.sqrt()).min(PI / 4.0);
    let mut breaks = vec![0.0];
    let mut edge = 0.5 * w;
    while edge < PI {
        breaks.push(edge);
        edge *= 2.0;
    }
    breaks.push(PI);
    // φ + B is formed by cancellation, so the integrand carries relative noise
    // of about Λ·ε; asking for less makes the error estimate stall
    let rel = cfg.tol.max(4.0 * lam * f64::EPSILON);
    let res = quadrature::integrate(f, &breaks, rel, 0.0, 4000);
    if !res.converged && res.abs_err > 1e-12 * res.value.abs() {
        return Err(Error::QuadratureFailure {
            x,
            nu,
            beta,
            estimate: res.abs_err / res.value.abs(),
        });
    }
    Ok(Scaled {
        mantissa: res.value / PI,
        log_scale: -lam * b,
    })
}

/// W(z; ρ; β) as a scaled value (see module docs).
pub(crate) fn wright_scaled(args: &WrightArgs, cfg: &SeriesConfig) -> Result<Scaled> {
    args.validate()?;
    cfg.validate()?;
    let WrightArgs { z, rho, beta } = *args;
    if z == 0.0 {
        return Ok(Scaled::plain(reciprocal_gamma_dd(Dd::from_f64(beta)).to_f64()));
    }
    if rho == 0.0 {
        let rg = reciprocal_gamma_dd(Dd::from_f64(beta)).to_f64();
        return Ok(Scaled {
            mantissa: rg,
            log_scale: z,
        });
    }
    let nu = -rho;
    let g = cancellation_exponent(z, nu);
    if z < 0.0 && g > QUADRATURE_SWITCH {
        return hankel(-z, nu, beta, cfg);
    }
    if z > 0.0 && g > POSITIVE_Z_LIMIT {
        return Err(Error::PrecisionLoss {
            z,
            rho,
            beta,
            estimate: (g - 104.0 * std::f64::consts::LN_2).exp(),
        });
    }
    let s = checked_series(args, cfg)?;
    Ok(Scaled::plain(s.sum.to_f64()))
}

pub(crate) fn wright_value(args: &WrightArgs, cfg: &SeriesConfig) -> Result<f64> {
    Ok(wright_scaled(args, cfg)?.value())
}

/// 1 - W(-x; -ν; 1) for x >= 0, accurate also when W is close to 1.
pub(crate) fn one_minus_wright(x: f64, nu: f64, cfg: &SeriesConfig) -> Result<f64> {
    let args = WrightArgs::new(-x, -nu, 1.0)?;
    cfg.validate()?;
    if x == 0.0 {
        return Ok(0.0);
    }
    if nu == 0.0 {
        return Ok(-(-x).exp_m1());
    }
    if cancellation_exponent(x, nu) > QUADRATURE_SWITCH {
        // W < e^{-4}·O(1): no cancellation in 1 - W
        return Ok(1.0 - wright_value(&args, cfg)?);
    }
    let s = checked_series(&args, cfg)?;
    Ok((Dd::ONE - s.sum).to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(z: f64, rho: f64, beta: f64) -> f64 {
        wright_value(&WrightArgs::new(z, rho, beta).unwrap(), &SeriesConfig::default()).unwrap()
    }

    #[test]
    fn both_routes_agree_near_switch() {
        // evaluate the series past the switch point and compare with quadrature
        let cfg = SeriesConfig::default();
        for &(x, nu, beta) in &[(4.5, 0.5, 1.0), (5.0, 0.35, 0.65), (5.5, 0.25, 1.0), (4.2, 0.45, 0.1)] {
            let args = WrightArgs::new(-x, -nu, beta).unwrap();
            let s = series(&args, &cfg).unwrap().sum.to_f64();
            let q = hankel(x, nu, beta, &cfg).unwrap().value();
            assert!(((s - q) / s).abs() < 1e-13, "x={x} nu={nu}: {s} vs {q}");
        }
    }

    #[test]
    fn rho_zero_is_exponential() {
        assert!((w(1.3, 0.0, 1.0) - 1.3f64.exp()).abs() < 1e-15 * 1.3f64.exp());
        assert!((w(-2.0, 0.0, 2.0) - (-2.0f64).exp()).abs() < 1e-17);
    }

    #[test]
    fn scaled_ratio_survives_underflow() {
        let cfg = SeriesConfig::default();
        let a = wright_scaled(&WrightArgs::new(-80.0, -0.5, 0.5).unwrap(), &cfg).unwrap();
        let b = wright_scaled(&WrightArgs::new(-80.0, -0.5, 1.0).unwrap(), &cfg).unwrap();
        assert_eq!(a.value(), 0.0);
        // M_{1/2}(x)/erfc(x/2) ~ x/2 for large x
        let q = a.ratio(b);
        assert!(q > 39.0 && q < 41.0, "{q}");
    }

    #[test]
    fn complement_small_argument() {
        let cfg = SeriesConfig::default();
        // 1 - erfc(x/2) = erf(x/2)
        let x = 1e-8;
        let c = one_minus_wright(x, 0.5, &cfg).unwrap();
        assert!(((c - libm::erf(x / 2.0)) / c).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_rho() {
        assert!(WrightArgs::new(1.0, 0.1, 1.0).is_err());
        assert!(WrightArgs::new(1.0, -1.0, 1.0).is_err());
    }
}
