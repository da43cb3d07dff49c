//! The α = 1 (classical) flux problem, written with erf/erfc and exp only.

use super::problem::{FluxProblem, Problem};
use super::roots::first_root;
use super::solution::{Coefficients, SimilaritySolution, SolutionKind};
use crate::error::{invalid, Error, Result};
use crate::special_functions::{erf, erfc};
use std::f64::consts::PI;

/// ln erfc(y), finite far beyond the underflow of erfc itself.
pub(crate) fn ln_erfc(y: f64) -> f64 {
    let e = erfc(y);
    if e > 1e-280 {
        return e.ln();
    }
    // erfc(y) = e^{-y²}/(y√π) · (1 - 1/(2y²) + 3/(2y²)² - 15/(2y²)³ + ...), y > 26
    let u = 1.0 / (2.0 * y * y);
    let mut term = 1.0;
    let mut s = 1.0;
    for k in 1..=6 {
        term *= -((2 * k - 1) as f64) * u;
        s += term;
    }
    -y * y - (y * PI.sqrt()).ln() + s.ln()
}

/// e^{-y²} / erfc(y)
pub(crate) fn exp_over_erfc(y: f64) -> f64 {
    (-y * y - ln_erfc(y)).exp()
}

/// erfc(a) / erfc(b)
pub(crate) fn erfc_ratio(a: f64, b: f64) -> f64 {
    let (ea, eb) = (erfc(a), erfc(b));
    if ea > 1e-280 && eb > 1e-280 {
        return ea / eb;
    }
    (ln_erfc(a) - ln_erfc(b)).exp()
}

struct ClassicalTerms {
    liquid: f64,
    solid: f64,
}

/// Terms of Q e^{-λ²y²} - Ste e^{-y²} / (√π erfc(y)) at y = μ/2.
fn terms(y: f64, q: f64, ste: f64, lambda: f64) -> ClassicalTerms {
    ClassicalTerms {
        liquid: q * (-lambda * lambda * y * y).exp(),
        solid: if ste == 0.0 {
            0.0
        } else {
            ste * exp_over_erfc(y) / PI.sqrt()
        },
    }
}

/// Solves the α = 1 flux problem without any Wright-function evaluation.
///
/// With y = μ/2 the root equation reads
/// q₀/(ρ l λ_s) e^{-λ²y²} - k_s (T_m - T_i)/(ρ l λ_s²) · e^{-y²}/(√π erfc y) = y.
pub fn solve_classical_flux(p: &FluxProblem, tol: f64) -> Result<SimilaritySolution> {
    if p.alpha() != 1.0 {
        return Err(invalid(
            "alpha",
            format!("the classical solver needs alpha = 1, got {}", p.alpha()),
        ));
    }
    check_tol(tol)?;
    let m = p.medium();
    let lambda_s = (m.solid.k / (m.density * m.solid.c)).sqrt();
    let lambda_l = (m.liquid.k / (m.density * m.liquid.c)).sqrt();
    let lambda = lambda_s / lambda_l;
    let dt = m.subcooling();
    let q_crit = m.solid.k * dt / (lambda_s * PI.sqrt());
    if p.q0() <= q_crit {
        return Err(Error::SubcriticalFlux { q0: p.q0(), q_crit });
    }
    let rho_l = m.density * m.latent_heat;
    let q = p.q0() / (rho_l * lambda_s);
    let ste = m.solid.k * dt / (rho_l * lambda_s * lambda_s);
    let root = first_root(
        |y| {
            let t = terms(y, q, ste, lambda);
            Ok(t.liquid - t.solid - y)
        },
        "classical flux equation",
    )?;
    let y = root.x;
    let t = terms(y, q, ste, lambda);
    let residual = (t.liquid - t.solid - y).abs() / (t.liquid + t.solid + y);
    let mut warnings = root.warnings;
    if residual > tol {
        warnings.push(format!("relative root residual {residual:e} exceeds tol {tol:e}"));
    }
    let mu = 2.0 * y;
    let kc = p.q0() * PI.sqrt() * lambda_l / m.liquid.k;
    let a = m.melting_temperature + kc * erf(lambda * y);
    let inv = if dt == 0.0 { 0.0 } else { dt / erfc(y) };
    let coeffs = Coefficients {
        a,
        b: -kc,
        c: m.initial_temperature + inv,
        d: -inv,
    };
    Ok(SimilaritySolution::assemble(
        SolutionKind::ClassicalFlux,
        mu,
        coeffs,
        Problem::Flux(*p),
        residual,
        warnings,
    ))
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol < 1.0 {
        Ok(())
    } else {
        Err(invalid("tol", format!("must lie in (0, 1), got {tol}")))
    }
}
