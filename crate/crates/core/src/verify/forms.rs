//! Checks that pin the corrected forms against their alternatives.

use super::residual::stefan_residual;
use crate::error::{invalid, Error, Result};
use crate::similarity::{
    first_root, g_terms, g_terms_with_lambda_l, solve_classical_flux, solve_flux, FluxProblem, SimilaritySolution,
};
use crate::special_functions::SeriesConfig;
use serde::Serialize;

/// G_α with an extra factor λ_l on its first term. This form does not follow
/// from the Stefan condition unless λ_l = 1; it is kept to show that it fails.
pub fn g_alpha_lambda_l_form(x: f64, p: &FluxProblem) -> Result<f64> {
    Ok(g_terms_with_lambda_l(x, p, &SeriesConfig::default())?.value())
}

#[derive(Clone, Debug, Serialize)]
pub struct FormPin {
    pub t: f64,
    pub lambda_l: f64,
    pub corrected_mu: f64,
    /// Stefan residual of the solution built on the corrected root
    pub corrected_residual: f64,
    /// ρ l λ_s t^{-α/2} |G_{λ_l form}(μ) - c_α μ| at the corrected root
    pub alt_at_corrected_root: f64,
    /// root of the λ_l form, if it has one
    pub alt_mu: Option<f64>,
    /// Stefan residual of the solution built on that root
    pub alt_root_residual: Option<f64>,
    /// every available λ_l-form residual is >= 10× the corrected one
    pub pinned: bool,
}

/// Compares the corrected root equation with the λ_l form at time t.
pub fn lambda_l_form_pin(p: &FluxProblem, t: f64) -> Result<FormPin> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(invalid("t", format!("must be finite and > 0, got {t}")));
    }
    let cfg = SeriesConfig::default();
    let m = p.medium();
    let d = p.params();
    let sol = solve_flux(p, 1e-12)?;
    let mu = sol.mu();
    let corrected_residual = stefan_residual(&sol, t)?;
    let scale = m.density * m.latent_heat * d.lambda_s * t.powf(-m.alpha / 2.0);
    let alt_at_corrected_root = scale * (g_terms_with_lambda_l(mu, p, &cfg)?.value() - d.c_alpha * mu).abs();

    let alt = first_root(
        |x| Ok(g_terms_with_lambda_l(x, p, &cfg)?.value() - d.c_alpha * x),
        "lambda_l form of G_alpha(x) - c_alpha x",
    );
    let (alt_mu, alt_root_residual) = match alt {
        Ok(root) => {
            let s = SimilaritySolution::flux_with_mu(p, root.x)?;
            (Some(root.x), Some(stefan_residual(&s, t)?))
        }
        Err(Error::NoBracket { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    let bound = 10.0 * corrected_residual;
    let pinned = alt_at_corrected_root >= bound && alt_root_residual.is_none_or(|r| r >= bound);
    Ok(FormPin {
        t,
        lambda_l: d.lambda_l,
        corrected_mu: mu,
        corrected_residual,
        alt_at_corrected_root,
        alt_mu,
        alt_root_residual,
        pinned,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaRow {
    pub alpha: f64,
    pub mu: Option<f64>,
    /// |μ_α - μ₁| against the classical solver
    pub gap: Option<f64>,
    /// why this α could not be solved (e.g. subcritical flux)
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaScan {
    pub classical_mu: f64,
    pub rows: Vec<AlphaRow>,
}

impl AlphaScan {
    pub fn last_gap(&self) -> Option<f64> {
        self.rows.last().and_then(|r| r.gap)
    }
}

/// μ_α along an ascending α grid in (0, 1], compared with μ₁ from the
/// erf/erfc solver. Rows where the flux is subcritical are reported, not fatal.
pub fn alpha_limit_scan(p: &FluxProblem, alphas: &[f64]) -> Result<AlphaScan> {
    if alphas.is_empty() {
        return Err(invalid("alphas", "empty grid"));
    }
    if alphas.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(invalid("alphas", "must be strictly ascending"));
    }
    if alphas.iter().any(|&a| !(a > 0.0 && a <= 1.0)) {
        return Err(invalid("alphas", "every entry must lie in (0, 1]"));
    }
    let classical_mu = solve_classical_flux(&p.with_alpha(1.0)?, 1e-12)?.mu();
    let rows = alphas
        .iter()
        .map(|&alpha| match p.with_alpha(alpha).and_then(|q| solve_flux(&q, 1e-12)) {
            Ok(s) => AlphaRow {
                alpha,
                mu: Some(s.mu()),
                gap: Some((s.mu() - classical_mu).abs()),
                error: None,
            },
            Err(e) => AlphaRow {
                alpha,
                mu: None,
                gap: None,
                error: Some(e.to_string()),
            },
        })
        .collect();
    Ok(AlphaScan { classical_mu, rows })
}

/// ρ l λ_s t^{-α/2} |G_α(μ) - c_α μ|, the Stefan residual predicted by the
/// root equation alone.
pub fn predicted_stefan_residual(p: &FluxProblem, mu: f64, t: f64) -> Result<f64> {
    let m = p.medium();
    let d = p.params();
    let g = g_terms(mu, p, &SeriesConfig::default())?.value();
    Ok(m.density * m.latent_heat * d.lambda_s * t.powf(-m.alpha / 2.0) * (g - d.c_alpha * mu).abs())
}
