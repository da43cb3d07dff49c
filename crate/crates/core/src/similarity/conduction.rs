use super::problem::{critical_flux, DerivedParams, FluxProblem};
use crate::error::{Error, Result};
use crate::special_functions::{mainardi_scaled, wright_neg_scaled, SeriesConfig};
use serde::Serialize;

/// Heat conduction in the solid when q₀ <= q_crit (no phase change):
/// Θ(x, t) = a + b (1 - W(-x/(λ_s t^{α/2}))), a = T_i + q₀ λ_s Γ(1-α/2)/k_s, b = -(a - T_i).
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ConductionSolution {
    pub a: f64,
    pub b: f64,
    pub lambda_s: f64,
    pub alpha: f64,
    problem: FluxProblem,
    #[serde(skip)]
    cfg: SeriesConfig,
}

impl ConductionSolution {
    pub fn new(p: &FluxProblem) -> Result<Self> {
        let q_crit = critical_flux(p);
        if p.q0() > q_crit {
            return Err(Error::SupercriticalFlux { q0: p.q0(), q_crit });
        }
        let m = p.medium();
        let d: DerivedParams = p.params();
        let amp = p.q0() * d.lambda_s * d.gamma_factor / m.solid.k;
        Ok(ConductionSolution {
            a: m.initial_temperature + amp,
            b: -amp,
            lambda_s: d.lambda_s,
            alpha: m.alpha,
            problem: *p,
            cfg: SeriesConfig::default(),
        })
    }

    pub fn problem(&self) -> &FluxProblem {
        &self.problem
    }

    fn eta(&self, x: f64, t: f64) -> f64 {
        x / (self.lambda_s * t.powf(self.alpha / 2.0))
    }

    fn check(&self, x: f64, t: f64, allow_t0: bool) -> Result<()> {
        let ok_t = t > 0.0 || (allow_t0 && t == 0.0);
        if x > 0.0 && ok_t && x.is_finite() && t.is_finite() {
            Ok(())
        } else {
            Err(Error::Domain {
                x,
                t,
                region: "quadrant x > 0, t > 0",
            })
        }
    }

    /// Θ(x, t) - T_i = (a - T_i) W(-x/(λ_s t^{α/2})); at t = 0 this is 0.
    pub(crate) fn variable_part(&self, x: f64, t: f64) -> Result<f64> {
        self.check(x, t, true)?;
        if t == 0.0 {
            return Ok(0.0);
        }
        Ok(-self.b * wright_neg_scaled(self.eta(x, t), self.alpha / 2.0, &self.cfg)?.value())
    }

    pub fn temperature(&self, x: f64, t: f64) -> Result<f64> {
        self.check(x, t, false)?;
        Ok(self.problem.medium().initial_temperature + self.variable_part(x, t)?)
    }

    pub fn gradient(&self, x: f64, t: f64) -> Result<f64> {
        self.check(x, t, false)?;
        let scale = self.lambda_s * t.powf(self.alpha / 2.0);
        Ok(self.b * mainardi_scaled(self.eta(x, t), self.alpha / 2.0, &self.cfg)?.value() / scale)
    }

    /// Θ(0⁺, t) = a, the same for every t.
    pub fn face_temperature(&self) -> f64 {
        self.a
    }
}

pub fn conduction_temperature(cs: &ConductionSolution, x: f64, t: f64) -> Result<f64> {
    cs.temperature(x, t)
}
