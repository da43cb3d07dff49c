use crate::error::Result;
use crate::similarity::{critical_flux, FluxProblem, Material, Medium, TemperatureProblem};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded source of random valid problems.
///
/// Conductivities, heat capacities, density, latent heat and the subcooling
/// are log-uniform over four decades around an O(1) reference; α is uniform
/// in [0.1, 0.99]. Flux problems take q₀ = q_crit (1 + ε) with ε log-uniform
/// in [1e-2, 1e1]; temperature problems take T₀ - T_m log-uniform like the
/// subcooling.
#[derive(Clone, Debug)]
pub struct ProblemGenerator {
    rng: ChaCha8Rng,
}

const DECADES: (f64, f64) = (-2.0, 2.0);

impl ProblemGenerator {
    pub fn new(seed: u64) -> Self {
        ProblemGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        10f64.powf(self.rng.gen_range(lo..hi))
    }

    fn thermal(&mut self) -> f64 {
        self.log_uniform(DECADES.0, DECADES.1)
    }

    pub fn medium(&mut self) -> Medium {
        let solid = Material {
            k: self.thermal(),
            c: self.thermal(),
        };
        let liquid = Material {
            k: self.thermal(),
            c: self.thermal(),
        };
        let density = self.thermal();
        let latent_heat = self.thermal();
        let dt = self.thermal();
        let alpha = self.rng.gen_range(0.1..=0.99);
        Medium {
            solid,
            liquid,
            density,
            latent_heat,
            initial_temperature: -dt,
            melting_temperature: 0.0,
            alpha,
        }
    }

    pub fn flux_problem(&mut self) -> Result<FluxProblem> {
        let m = self.medium();
        let eps = self.log_uniform(-2.0, 1.0);
        let p = FluxProblem::new(m, 1.0)?;
        p.with_q0(critical_flux(&p) * (1.0 + eps))
    }

    pub fn temperature_problem(&mut self) -> Result<TemperatureProblem> {
        let m = self.medium();
        let t0 = self.thermal();
        TemperatureProblem::new(m, t0)
    }
}
