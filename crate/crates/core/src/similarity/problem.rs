use crate::error::{invalid, Result};
use crate::special_functions::gamma;
use serde::{Deserialize, Serialize};

/// Thermal properties of one phase.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Material {
    /// conductivity, W/(m·K)
    pub k: f64,
    /// specific heat, J/(kg·K)
    pub c: f64,
}

impl Material {
    pub fn new(k: f64, c: f64) -> Result<Self> {
        let m = Material { k, c };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        positive("k", self.k)?;
        positive("c", self.c)
    }
}

fn positive(name: &'static str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, format!("must be finite and > 0, got {v}")))
    }
}

fn finite(name: &'static str, v: f64) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(invalid(name, format!("must be finite, got {v}")))
    }
}

/// Data shared by the flux and temperature problems.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Medium {
    pub solid: Material,
    pub liquid: Material,
    /// kg/m³, common to both phases
    pub density: f64,
    /// J/kg
    pub latent_heat: f64,
    /// T_i, K
    pub initial_temperature: f64,
    /// T_m, K
    pub melting_temperature: f64,
    /// order of the Caputo derivative, in (0, 1]
    pub alpha: f64,
}

impl Medium {
    fn validate(&self) -> Result<()> {
        self.solid.validate()?;
        self.liquid.validate()?;
        positive("density", self.density)?;
        positive("latent_heat", self.latent_heat)?;
        finite("initial_temperature", self.initial_temperature)?;
        finite("melting_temperature", self.melting_temperature)?;
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(invalid("alpha", format!("must lie in (0, 1], got {}", self.alpha)));
        }
        Ok(())
    }

    fn validate_two_phase(&self) -> Result<()> {
        self.validate()?;
        if !(self.initial_temperature < self.melting_temperature) {
            return Err(invalid(
                "initial_temperature",
                format!(
                    "two-phase problems need T_i < T_m (got T_i = {}, T_m = {}); use make_one_phase for T_i = T_m",
                    self.initial_temperature, self.melting_temperature
                ),
            ));
        }
        Ok(())
    }

    /// T_m - T_i
    pub fn subcooling(&self) -> f64 {
        self.melting_temperature - self.initial_temperature
    }

    pub fn derived(&self) -> DerivedParams {
        derive_params(self)
    }
}

/// Scales derived from the thermal data.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DerivedParams {
    /// sqrt(k_s / (ρ c_s))
    pub lambda_s: f64,
    /// sqrt(k_l / (ρ c_l))
    pub lambda_l: f64,
    /// lambda_s / lambda_l
    pub lambda: f64,
    /// Γ(1 + α/2) / Γ(1 - α/2), the slope of the root equations
    pub c_alpha: f64,
    /// Γ(1 - α/2)
    pub gamma_factor: f64,
}

pub fn derive_params(m: &Medium) -> DerivedParams {
    let lambda_s = (m.solid.k / (m.density * m.solid.c)).sqrt();
    let lambda_l = (m.liquid.k / (m.density * m.liquid.c)).sqrt();
    let h = m.alpha / 2.0;
    // arguments lie in [1/2, 3/2]: no poles
    let gamma_factor = gamma(1.0 - h).expect("Γ(1-α/2) is regular for α ∈ (0, 1]");
    let c_alpha = gamma(1.0 + h).expect("regular") / gamma_factor;
    DerivedParams {
        lambda_s,
        lambda_l,
        lambda: lambda_s / lambda_l,
        c_alpha,
        gamma_factor,
    }
}

/// Heat flux q₀ t^{-α/2} imposed at the fixed face.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FluxProblem {
    medium: Medium,
    q0: f64,
    one_phase: bool,
}

impl FluxProblem {
    /// Two-phase problem; requires T_i < T_m.
    pub fn new(medium: Medium, q0: f64) -> Result<Self> {
        medium.validate_two_phase()?;
        positive("q0", q0)?;
        Ok(FluxProblem {
            medium,
            q0,
            one_phase: false,
        })
    }

    pub fn medium(&self) -> &Medium {
        &self.medium
    }

    pub fn q0(&self) -> f64 {
        self.q0
    }

    pub fn alpha(&self) -> f64 {
        self.medium.alpha
    }

    pub fn is_one_phase(&self) -> bool {
        self.one_phase
    }

    pub fn params(&self) -> DerivedParams {
        derive_params(&self.medium)
    }

    /// Same data with another flux coefficient.
    pub fn with_q0(&self, q0: f64) -> Result<Self> {
        positive("q0", q0)?;
        Ok(FluxProblem { q0, ..*self })
    }

    /// Same data with another order α.
    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        let medium = Medium { alpha, ..self.medium };
        medium.validate()?;
        Ok(FluxProblem { medium, ..*self })
    }
}

/// Temperature T₀ > T_m imposed at the fixed face.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TemperatureProblem {
    medium: Medium,
    t0: f64,
    one_phase: bool,
}

impl TemperatureProblem {
    /// Two-phase problem; requires T_i < T_m < T₀.
    pub fn new(medium: Medium, t0: f64) -> Result<Self> {
        medium.validate_two_phase()?;
        check_face_temperature(&medium, t0)?;
        Ok(TemperatureProblem {
            medium,
            t0,
            one_phase: false,
        })
    }

    pub fn medium(&self) -> &Medium {
        &self.medium
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn alpha(&self) -> f64 {
        self.medium.alpha
    }

    pub fn is_one_phase(&self) -> bool {
        self.one_phase
    }

    pub fn params(&self) -> DerivedParams {
        derive_params(&self.medium)
    }

    pub fn with_t0(&self, t0: f64) -> Result<Self> {
        check_face_temperature(&self.medium, t0)?;
        Ok(TemperatureProblem { t0, ..*self })
    }
}

fn check_face_temperature(m: &Medium, t0: f64) -> Result<()> {
    finite("t0", t0)?;
    if !(t0 > m.melting_temperature) {
        return Err(invalid(
            "t0",
            format!("face temperature must exceed T_m = {}, got {t0}", m.melting_temperature),
        ));
    }
    Ok(())
}

/// Condition imposed at the fixed face.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FaceCondition {
    /// flux coefficient q₀
    Flux(f64),
    /// face temperature T₀
    Temperature(f64),
}

/// Either problem type.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Problem {
    Flux(FluxProblem),
    Temperature(TemperatureProblem),
}

impl Problem {
    pub fn medium(&self) -> &Medium {
        match self {
            Problem::Flux(p) => p.medium(),
            Problem::Temperature(p) => p.medium(),
        }
    }

    pub fn is_one_phase(&self) -> bool {
        match self {
            Problem::Flux(p) => p.one_phase,
            Problem::Temperature(p) => p.one_phase,
        }
    }
}

/// One-phase problem: the solid is at the melting temperature (T_i = T_m) and
/// shares the liquid's properties, so λ = 1 and the solid contributes nothing
/// to the root equation.
pub fn make_one_phase(
    face: FaceCondition,
    liquid: Material,
    density: f64,
    latent_heat: f64,
    melting_temperature: f64,
    alpha: f64,
) -> Result<Problem> {
    let medium = Medium {
        solid: liquid,
        liquid,
        density,
        latent_heat,
        initial_temperature: melting_temperature,
        melting_temperature,
        alpha,
    };
    medium.validate()?;
    match face {
        FaceCondition::Flux(q0) => {
            positive("q0", q0)?;
            Ok(Problem::Flux(FluxProblem {
                medium,
                q0,
                one_phase: true,
            }))
        }
        FaceCondition::Temperature(t0) => {
            check_face_temperature(&medium, t0)?;
            Ok(Problem::Temperature(TemperatureProblem {
                medium,
                t0,
                one_phase: true,
            }))
        }
    }
}

/// Smallest flux coefficient for which the face starts melting at t = 0⁺:
/// q_crit = k_s (T_m - T_i) / (λ_s Γ(1 - α/2)).
pub fn critical_flux(p: &FluxProblem) -> f64 {
    let m = p.medium();
    let d = p.params();
    m.solid.k * m.subcooling() / (d.lambda_s * d.gamma_factor)
}

/// Flux problem carrying the same similarity solution as a temperature problem
/// (or vice versa) shares every field except the face condition.
pub(crate) fn flux_from_temperature(p: &TemperatureProblem, q0: f64) -> Result<FluxProblem> {
    positive("q0", q0)?;
    Ok(FluxProblem {
        medium: p.medium,
        q0,
        one_phase: p.one_phase,
    })
}

pub(crate) fn temperature_from_flux(p: &FluxProblem, t0: f64) -> Result<TemperatureProblem> {
    check_face_temperature(&p.medium, t0)?;
    Ok(TemperatureProblem {
        medium: p.medium,
        t0,
        one_phase: p.one_phase,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    pub(crate) fn medium(alpha: f64) -> Medium {
        Medium {
            solid: Material { k: 2.22, c: 2050.0 },
            liquid: Material { k: 0.556, c: 4186.0 },
            density: 1000.0,
            latent_heat: 334_000.0,
            initial_temperature: 263.15,
            melting_temperature: 273.15,
            alpha,
        }
    }

    #[test]
    fn derived_scales() {
        let mut m = medium(1.0);
        let d = m.derived();
        assert!((d.c_alpha - 0.5).abs() < 1e-15);
        m.liquid = m.solid;
        assert_eq!(m.derived().lambda, 1.0);
        m.solid = Material {
            k: 4.0 * m.liquid.k,
            c: m.liquid.c,
        };
        assert!((m.derived().lambda - 2.0).abs() < 1e-15);
    }

    #[test]
    fn classical_threshold() {
        let p = FluxProblem::new(medium(1.0), 1.0).unwrap();
        let d = p.params();
        let expect = 2.22 * 10.0 / (d.lambda_s * PI.sqrt());
        assert!((critical_flux(&p) - expect).abs() < 1e-14 * expect);
    }

    #[test]
    fn threshold_linear_in_subcooling() {
        let p = FluxProblem::new(medium(0.6), 1.0).unwrap();
        let mut m = medium(0.6);
        m.initial_temperature = 273.15 - 20.0;
        let p2 = FluxProblem::new(m, 1.0).unwrap();
        assert!((critical_flux(&p2) / critical_flux(&p) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn construction_guards() {
        let mut m = medium(0.5);
        m.initial_temperature = m.melting_temperature;
        assert!(FluxProblem::new(m, 1.0).is_err());
        assert!(FluxProblem::new(medium(0.0), 1.0).is_err());
        assert!(FluxProblem::new(medium(1.1), 1.0).is_err());
        assert!(FluxProblem::new(medium(0.5), -1.0).is_err());
        assert!(TemperatureProblem::new(medium(0.5), 273.15).is_err());
    }

    #[test]
    fn one_phase_has_zero_threshold() {
        let p = make_one_phase(
            FaceCondition::Flux(10.0),
            Material { k: 0.556, c: 4186.0 },
            1000.0,
            334_000.0,
            273.15,
            0.7,
        )
        .unwrap();
        let Problem::Flux(p) = p else { panic!() };
        assert_eq!(critical_flux(&p), 0.0);
        assert_eq!(p.params().lambda, 1.0);
        assert!(p.is_one_phase());
    }
}
