use super::auxiliary::{f_terms, g_terms, RootTerms};
use super::classical::{check_tol, erfc_ratio, ln_erfc};
use super::problem::{critical_flux, derive_params, DerivedParams, FluxProblem, Problem, TemperatureProblem};
use super::roots::first_root;
use crate::error::{Error, Result};
use crate::special_functions::{erf, erfc, mainardi_scaled, one_minus_wright, wright_neg_scaled, SeriesConfig};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionKind {
    /// flux data, Wright-function formulas
    Flux,
    /// temperature data, Wright-function formulas
    Temperature,
    /// flux data at α = 1, erf/erfc formulas
    ClassicalFlux,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    Solid,
    Liquid,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Solid => "solid",
            Phase::Liquid => "liquid",
        }
    }
}

/// Constants of the ansatz
/// Θ_l = A + B (1 - W(-x/(λ_l t^{α/2}))), Θ_s = C + D (1 - W(-x/(λ_s t^{α/2})))
/// (with W(-η) replaced by erfc(η/2) for the classical kind).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Coefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

/// A solved similarity solution: front r(t) = μ λ_s t^{α/2} and the two
/// temperature profiles.
#[derive(Clone, Debug, Serialize)]
pub struct SimilaritySolution {
    kind: SolutionKind,
    mu: f64,
    coeffs: Coefficients,
    params: DerivedParams,
    problem: Problem,
    residual: f64,
    warnings: Vec<String>,
    #[serde(skip)]
    cfg: SeriesConfig,
}

fn relative_residual(t: RootTerms, c_mu: f64) -> f64 {
    (t.value() - c_mu).abs() / (t.liquid.abs() + t.solid.abs() + c_mu)
}

/// Solves the flux problem: μ_α is the first positive root of G_α(x) = c_α x.
///
/// Requires q₀ > q_crit; otherwise the data describe heat conduction only.
pub fn solve_flux(p: &FluxProblem, tol: f64) -> Result<SimilaritySolution> {
    check_tol(tol)?;
    let q_crit = critical_flux(p);
    if p.q0() <= q_crit {
        return Err(Error::SubcriticalFlux { q0: p.q0(), q_crit });
    }
    let cfg = SeriesConfig::default();
    let c_alpha = p.params().c_alpha;
    let root = first_root(
        |x| Ok(g_terms(x, p, &cfg)?.value() - c_alpha * x),
        "G_alpha(x) - c_alpha x",
    )?;
    let mut sol = SimilaritySolution::flux_with_mu(p, root.x)?;
    sol.warnings = root.warnings;
    if sol.residual > tol {
        let r = sol.residual;
        sol.warnings
            .push(format!("relative root residual {r:e} exceeds tol {tol:e}"));
    }
    Ok(sol)
}

/// Solves the temperature problem: ξ_α is the first positive root of
/// F_α(x) = c_α x.
pub fn solve_temperature(p: &TemperatureProblem, tol: f64) -> Result<SimilaritySolution> {
    check_tol(tol)?;
    let cfg = SeriesConfig::default();
    let d = p.params();
    let root = first_root(
        |x| Ok(f_terms(x, p, &cfg)?.value() - d.c_alpha * x),
        "F_alpha(x) - c_alpha x",
    )?;
    let xi = root.x;
    let residual = relative_residual(f_terms(xi, p, &cfg)?, d.c_alpha * xi);
    let mut warnings = root.warnings;
    if residual > tol {
        warnings.push(format!("relative root residual {residual:e} exceeds tol {tol:e}"));
    }
    let m = p.medium();
    let dl = p.t0() - m.melting_temperature;
    let coeffs = Coefficients {
        a: p.t0(),
        b: -dl / one_minus_wright(d.lambda * xi, m.alpha / 2.0, &cfg)?,
        c: 0.0,
        d: 0.0,
    };
    let coeffs = with_solid_coeffs(coeffs, m.initial_temperature, m.subcooling(), xi, m.alpha, &cfg)?;
    Ok(SimilaritySolution {
        kind: SolutionKind::Temperature,
        mu: xi,
        coeffs,
        params: d,
        problem: Problem::Temperature(*p),
        residual,
        warnings,
        cfg,
    })
}

fn with_solid_coeffs(
    mut c: Coefficients,
    t_i: f64,
    dt: f64,
    mu: f64,
    alpha: f64,
    cfg: &SeriesConfig,
) -> Result<Coefficients> {
    // C + D = T_i; D = -(T_m - T_i)/W(-μ) (may overflow for huge μ, evaluation
    // does not go through these constants)
    let inv = if dt == 0.0 {
        0.0
    } else {
        dt / wright_neg_scaled(mu, alpha / 2.0, cfg)?.value()
    };
    c.c = t_i + inv;
    c.d = -inv;
    Ok(c)
}

impl SimilaritySolution {
    /// Flux-kind formulas assembled for an arbitrary coefficient `mu > 0`,
    /// which need not be a root. `residual()` then measures how far it is from
    /// one. Useful for probing the Stefan condition away from the solution.
    pub fn flux_with_mu(p: &FluxProblem, mu: f64) -> Result<Self> {
        if !(mu > 0.0 && mu.is_finite()) {
            return Err(crate::error::invalid("mu", format!("must be finite and > 0, got {mu}")));
        }
        let cfg = SeriesConfig::default();
        let d = p.params();
        let residual = relative_residual(g_terms(mu, p, &cfg)?, d.c_alpha * mu);
        let m = p.medium();
        let k = p.q0() * d.lambda_l * d.gamma_factor / m.liquid.k;
        let coeffs = Coefficients {
            a: m.melting_temperature + k * one_minus_wright(d.lambda * mu, m.alpha / 2.0, &cfg)?,
            b: -k,
            c: 0.0,
            d: 0.0,
        };
        let coeffs = with_solid_coeffs(coeffs, m.initial_temperature, m.subcooling(), mu, m.alpha, &cfg)?;
        Ok(SimilaritySolution {
            kind: SolutionKind::Flux,
            mu,
            coeffs,
            params: d,
            problem: Problem::Flux(*p),
            residual,
            warnings: Vec::new(),
            cfg,
        })
    }

    pub(crate) fn assemble(
        kind: SolutionKind,
        mu: f64,
        coeffs: Coefficients,
        problem: Problem,
        residual: f64,
        warnings: Vec<String>,
    ) -> Self {
        SimilaritySolution {
            kind,
            mu,
            coeffs,
            params: derive_params(problem.medium()),
            problem,
            residual,
            warnings,
            cfg: SeriesConfig::default(),
        }
    }

    pub fn kind(&self) -> SolutionKind {
        self.kind
    }

    /// μ_α (flux kinds) or ξ_α (temperature kind)
    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn coeffs(&self) -> Coefficients {
        self.coeffs
    }

    pub fn params(&self) -> DerivedParams {
        self.params
    }

    pub fn problem(&self) -> &Problem {
        &self.problem
    }

    pub fn alpha(&self) -> f64 {
        self.problem.medium().alpha
    }

    /// Root residual relative to the magnitude of the equation's terms.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// r(t) = μ λ_s t^{α/2}, t >= 0.
    pub fn front_position(&self, t: f64) -> f64 {
        self.mu * self.params.lambda_s * t.powf(self.alpha() / 2.0)
    }

    fn lambda_of(&self, phase: Phase) -> f64 {
        match phase {
            Phase::Liquid => self.params.lambda_l,
            Phase::Solid => self.params.lambda_s,
        }
    }

    /// Similarity variable x / (λ_phase t^{α/2}); +∞ at t = 0 for x > 0.
    fn eta(&self, phase: Phase, x: f64, t: f64) -> f64 {
        if t == 0.0 {
            return if x == 0.0 { 0.0 } else { f64::INFINITY };
        }
        x / (self.lambda_of(phase) * t.powf(self.alpha() / 2.0))
    }

    fn check_point(&self, phase: Phase, x: f64, t: f64, extend: bool) -> Result<()> {
        let region = match phase {
            Phase::Liquid => "liquid region 0 <= x <= r(t), t > 0",
            Phase::Solid => "solid region x >= r(t), t > 0",
        };
        let bad = Error::Domain { x, t, region };
        if !(x >= 0.0 && t >= 0.0) || !x.is_finite() || !t.is_finite() {
            return Err(bad);
        }
        if extend {
            return Ok(());
        }
        if t == 0.0 {
            return Err(bad);
        }
        let r = self.front_position(t);
        let inside = match phase {
            Phase::Liquid => x <= r,
            Phase::Solid => x >= r,
        };
        if inside {
            Ok(())
        } else {
            Err(bad)
        }
    }

    fn subcooling(&self) -> f64 {
        self.problem.medium().subcooling()
    }

    /// W(-η)/W(-μ) for the fractional kinds, erfc(η/2)/erfc(μ/2) for the classical.
    fn solid_shape(&self, eta: f64) -> Result<f64> {
        if eta == f64::INFINITY {
            return Ok(0.0);
        }
        Ok(match self.kind {
            SolutionKind::ClassicalFlux => erfc_ratio(eta / 2.0, self.mu / 2.0),
            _ => {
                let nu = self.alpha() / 2.0;
                wright_neg_scaled(eta, nu, &self.cfg)?.ratio(wright_neg_scaled(self.mu, nu, &self.cfg)?)
            }
        })
    }

    /// 1 - W(-η) or erf(η/2).
    fn liquid_shape(&self, eta: f64) -> Result<f64> {
        if eta == f64::INFINITY {
            return Ok(1.0);
        }
        Ok(match self.kind {
            SolutionKind::ClassicalFlux => erf(eta / 2.0),
            _ => one_minus_wright(eta, self.alpha() / 2.0, &self.cfg)?,
        })
    }

    /// Split Θ = offset + variable with `variable` → 0 as η → ∞; the constant
    /// carries no information about the PDE, so residual checks use only the
    /// variable part.
    pub(crate) fn theta_parts(&self, phase: Phase, x: f64, t: f64) -> Result<(f64, f64)> {
        let eta = self.eta(phase, x, t);
        let c = self.coeffs;
        match phase {
            Phase::Liquid => {
                // A + B(1 - W) = (A + B) - B W
                let w = if eta == f64::INFINITY {
                    0.0
                } else {
                    match self.kind {
                        SolutionKind::ClassicalFlux => erfc(eta / 2.0),
                        _ => wright_neg_scaled(eta, self.alpha() / 2.0, &self.cfg)?.value(),
                    }
                };
                Ok((c.a + c.b, -c.b * w))
            }
            Phase::Solid => {
                let m = self.problem.medium();
                let dt = self.subcooling();
                let v = if dt == 0.0 { 0.0 } else { dt * self.solid_shape(eta)? };
                Ok((m.initial_temperature, v))
            }
        }
    }

    /// Temperature of one phase's formula at (x, t).
    ///
    /// With `extend = false` the point must lie in that phase's region; with
    /// `extend = true` the formula is evaluated on the whole quadrant x, t >= 0.
    pub fn theta(&self, phase: Phase, x: f64, t: f64, extend: bool) -> Result<f64> {
        self.check_point(phase, x, t, extend)?;
        let eta = self.eta(phase, x, t);
        match phase {
            Phase::Liquid => {
                let c = self.coeffs;
                Ok(c.a + c.b * self.liquid_shape(eta)?)
            }
            Phase::Solid => {
                let (off, var) = self.theta_parts(phase, x, t)?;
                Ok(off + var)
            }
        }
    }

    pub fn theta_liquid(&self, x: f64, t: f64) -> Result<f64> {
        self.theta(Phase::Liquid, x, t, false)
    }

    pub fn theta_solid(&self, x: f64, t: f64) -> Result<f64> {
        self.theta(Phase::Solid, x, t, false)
    }

    /// Temperature at (x, t), choosing the phase from the front position.
    pub fn temperature(&self, x: f64, t: f64) -> Result<(Phase, f64)> {
        let phase = if x < self.front_position(t) {
            Phase::Liquid
        } else {
            Phase::Solid
        };
        Ok((phase, self.theta(phase, x, t, false)?))
    }

    /// ∂Θ/∂x of one phase's formula (t > 0).
    pub fn temperature_gradient(&self, phase: Phase, x: f64, t: f64, extend: bool) -> Result<f64> {
        self.check_point(phase, x, t, extend)?;
        if t == 0.0 {
            return Err(Error::Domain {
                x,
                t,
                region: "quadrant t > 0 (the gradient is singular at t = 0)",
            });
        }
        let eta = self.eta(phase, x, t);
        let scale = self.lambda_of(phase) * t.powf(self.alpha() / 2.0);
        let nu = self.alpha() / 2.0;
        match (phase, self.kind) {
            (Phase::Liquid, SolutionKind::ClassicalFlux) => {
                Ok(self.coeffs.b * (-eta * eta / 4.0).exp() / (PI.sqrt() * scale))
            }
            (Phase::Liquid, _) => Ok(self.coeffs.b * mainardi_scaled(eta, nu, &self.cfg)?.value() / scale),
            (Phase::Solid, kind) => {
                let dt = self.subcooling();
                if dt == 0.0 {
                    return Ok(0.0);
                }
                let shape = match kind {
                    SolutionKind::ClassicalFlux => {
                        let y = self.mu / 2.0;
                        (-eta * eta / 4.0 - ln_erfc(y)).exp() / PI.sqrt()
                    }
                    _ => mainardi_scaled(eta, nu, &self.cfg)?.ratio(wright_neg_scaled(self.mu, nu, &self.cfg)?),
                };
                Ok(-dt * shape / scale)
            }
        }
    }

    /// Face temperature T₀ = Θ_l(0, t) (constant in t). For a flux solution
    /// this is the data of the equivalent temperature problem.
    pub fn face_temperature(&self) -> f64 {
        self.coeffs.a
    }

    /// Flux coefficient q₀ = -k_l t^{α/2} ∂Θ_l/∂x(0, t) of a temperature
    /// solution: q₀ = (T₀ - T_m) k_l / ((1 - W(-λξ)) λ_l Γ(1 - α/2)).
    pub fn face_flux_coefficient(&self) -> Result<f64> {
        let m = self.problem.medium();
        match self.problem {
            Problem::Flux(p) => Ok(p.q0()),
            Problem::Temperature(p) => {
                let d = self.params;
                let om = one_minus_wright(d.lambda * self.mu, m.alpha / 2.0, &self.cfg)?;
                Ok((p.t0() - m.melting_temperature) * m.liquid.k / (om * d.lambda_l * d.gamma_factor))
            }
        }
    }

    /// |root function(μ) - c_α μ| without normalisation.
    pub fn root_residual_abs(&self) -> Result<f64> {
        let c_mu = self.params.c_alpha * self.mu;
        let t = match (&self.problem, self.kind) {
            (Problem::Flux(p), SolutionKind::Flux) => g_terms(self.mu, p, &self.cfg)?,
            (Problem::Flux(p), SolutionKind::ClassicalFlux) => g_terms(self.mu, p, &self.cfg)?,
            (Problem::Temperature(p), _) => f_terms(self.mu, p, &self.cfg)?,
            (Problem::Flux(_), SolutionKind::Temperature) => unreachable!("kind matches problem"),
        };
        Ok((t.value() - c_mu).abs())
    }
}

/// Free-function forms of the solution accessors.
pub fn front_position(sol: &SimilaritySolution, t: f64) -> f64 {
    sol.front_position(t)
}

pub fn theta_liquid(sol: &SimilaritySolution, x: f64, t: f64) -> Result<f64> {
    sol.theta_liquid(x, t)
}

pub fn theta_solid(sol: &SimilaritySolution, x: f64, t: f64) -> Result<f64> {
    sol.theta_solid(x, t)
}

pub fn temperature_gradient(sol: &SimilaritySolution, phase: Phase, x: f64, t: f64) -> Result<f64> {
    sol.temperature_gradient(phase, x, t, false)
}

/// T₀ of the temperature problem equivalent to a flux solution.
pub fn face_temperature(sol: &SimilaritySolution) -> Result<f64> {
    match sol.kind {
        SolutionKind::Flux | SolutionKind::ClassicalFlux => Ok(sol.face_temperature()),
        SolutionKind::Temperature => Err(Error::Unsupported(
            "face_temperature expects a flux solution (a temperature solution has T0 as data)",
        )),
    }
}

/// q₀ of the flux problem equivalent to a temperature solution.
pub fn face_flux_coefficient(sol: &SimilaritySolution) -> Result<f64> {
    match sol.kind {
        SolutionKind::Temperature => sol.face_flux_coefficient(),
        _ => Err(Error::Unsupported(
            "face_flux_coefficient expects a temperature solution (a flux solution has q0 as data)",
        )),
    }
}
