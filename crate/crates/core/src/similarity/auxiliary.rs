//! The auxiliary functions F_{1α}, F_{2α} and the root functions G_α, F_α.

use super::problem::{FluxProblem, TemperatureProblem};
use crate::error::{invalid, Error, Result};
use crate::special_functions::{mainardi_scaled, one_minus_wright, wright_neg_scaled, SeriesConfig};

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha <= 1.0 {
        Ok(())
    } else {
        Err(invalid("alpha", format!("must lie in (0, 1], got {alpha}")))
    }
}

fn check_x(x: f64) -> Result<()> {
    if x >= 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(invalid("x", format!("must be finite and >= 0, got {x}")))
    }
}

pub(crate) fn f2_with(x: f64, alpha: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_alpha(alpha)?;
    check_x(x)?;
    let nu = alpha / 2.0;
    let num = mainardi_scaled(x, nu, cfg)?;
    let den = wright_neg_scaled(x, nu, cfg)?;
    if den.mantissa.abs() < 1e-300 {
        return Err(Error::Underflow { x });
    }
    let v = num.ratio(den);
    if !v.is_finite() {
        return Err(Error::Underflow { x });
    }
    Ok(v)
}

pub(crate) fn f1_with(x: f64, alpha: f64, cfg: &SeriesConfig) -> Result<f64> {
    check_alpha(alpha)?;
    if !(x > 0.0) {
        return Err(Error::Singularity { what: "F1", x });
    }
    check_x(x)?;
    let nu = alpha / 2.0;
    let m = mainardi_scaled(x, nu, cfg)?.value();
    Ok(m / one_minus_wright(x, nu, cfg)?)
}

/// F_{2α}(x) = M_{α/2}(x) / W(-x; -α/2; 1), x >= 0.
///
/// F_{2α}(0) = 1/Γ(1 - α/2). Both factors are evaluated with a common scale
/// factor split off, so the ratio stays finite for large x.
pub fn f2_alpha(x: f64, alpha: f64) -> Result<f64> {
    f2_with(x, alpha, &SeriesConfig::default())
}

/// F_{1α}(x) = M_{α/2}(x) / (1 - W(-x; -α/2; 1)), x > 0.
pub fn f1_alpha(x: f64, alpha: f64) -> Result<f64> {
    f1_with(x, alpha, &SeriesConfig::default())
}

/// The two terms of a root function, kept apart so residuals can be measured
/// against their magnitude.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct RootTerms {
    /// liquid (face) contribution, positive
    pub liquid: f64,
    /// solid contribution, subtracted; exactly 0 when T_i = T_m
    pub solid: f64,
}

impl RootTerms {
    pub fn value(&self) -> f64 {
        self.liquid - self.solid
    }
}

/// k_s (T_m - T_i) F_{2α}(x) / (ρ l λ_s²)
fn solid_term(p: &crate::similarity::Medium, lambda_s: f64, x: f64, cfg: &SeriesConfig) -> Result<f64> {
    let dt = p.subcooling();
    if dt == 0.0 {
        return Ok(0.0);
    }
    let coef = p.solid.k * dt / (p.density * p.latent_heat * lambda_s * lambda_s);
    Ok(coef * f2_with(x, p.alpha, cfg)?)
}

pub(crate) fn g_terms(x: f64, p: &FluxProblem, cfg: &SeriesConfig) -> Result<RootTerms> {
    check_x(x)?;
    let m = p.medium();
    let d = p.params();
    let coef = p.q0() * d.gamma_factor / (m.density * m.latent_heat * d.lambda_s);
    let liquid = coef * mainardi_scaled(d.lambda * x, m.alpha / 2.0, cfg)?.value();
    Ok(RootTerms {
        liquid,
        solid: solid_term(m, d.lambda_s, x, cfg)?,
    })
}

/// Same as `g_terms` but with the extra factor λ_l multiplying the liquid term.
pub(crate) fn g_terms_with_lambda_l(x: f64, p: &FluxProblem, cfg: &SeriesConfig) -> Result<RootTerms> {
    let t = g_terms(x, p, cfg)?;
    Ok(RootTerms {
        liquid: t.liquid * p.params().lambda_l,
        ..t
    })
}

pub(crate) fn f_terms(x: f64, p: &TemperatureProblem, cfg: &SeriesConfig) -> Result<RootTerms> {
    let m = p.medium();
    let d = p.params();
    let coef = m.liquid.k * (p.t0() - m.melting_temperature) / (m.density * m.latent_heat * d.lambda_s * d.lambda_l);
    let liquid = coef * f1_with(d.lambda * x, m.alpha, cfg)?;
    Ok(RootTerms {
        liquid,
        solid: solid_term(m, d.lambda_s, x, cfg)?,
    })
}

/// G_α(x) = q₀ Γ(1-α/2) M_{α/2}(λx) / (ρ l λ_s) - k_s (T_m - T_i) F_{2α}(x) / (ρ l λ_s²).
///
/// The flux root μ_α solves G_α(x) = c_α x.
pub fn g_alpha(x: f64, p: &FluxProblem) -> Result<f64> {
    Ok(g_terms(x, p, &SeriesConfig::default())?.value())
}

/// F_α(x) = k_l (T₀ - T_m) F_{1α}(λx) / (ρ l λ_s λ_l) - k_s (T_m - T_i) F_{2α}(x) / (ρ l λ_s²).
///
/// The temperature root ξ_α solves F_α(x) = c_α x.
pub fn f_alpha(x: f64, p: &TemperatureProblem) -> Result<f64> {
    Ok(f_terms(x, p, &SeriesConfig::default())?.value())
}
