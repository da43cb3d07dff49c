//! Flux and temperature problems, their root equations and the assembled
//! similarity solutions.

mod auxiliary;
mod classical;
mod conduction;
mod problem;
mod roots;
mod solution;

pub use auxiliary::{f1_alpha, f2_alpha, f_alpha, g_alpha};
pub use classical::solve_classical_flux;
pub use conduction::{conduction_temperature, ConductionSolution};
pub use problem::{
    critical_flux, derive_params, make_one_phase, DerivedParams, FaceCondition, FluxProblem, Material, Medium, Problem,
    TemperatureProblem,
};
pub use solution::{
    face_flux_coefficient, face_temperature, front_position, solve_flux, solve_temperature, temperature_gradient,
    theta_liquid, theta_solid, Coefficients, Phase, SimilaritySolution, SolutionKind,
};

pub(crate) use auxiliary::{g_terms, g_terms_with_lambda_l};
pub(crate) use problem::{flux_from_temperature, temperature_from_flux};
pub(crate) use roots::first_root;

/// Default solver tolerance on the relative root residual.
pub const DEFAULT_TOL: f64 = 1e-12;
