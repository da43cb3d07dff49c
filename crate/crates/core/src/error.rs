use thiserror::Error;

/// Errors produced by the library.
///
/// Each variant maps to one documented CLI exit code (see `cli::exit_code`).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("gamma function has a pole at x = {0}")]
    GammaPole(f64),

    #[error("Wright series did not converge within {max_terms} terms (z = {z}, rho = {rho}, beta = {beta})")]
    NonConvergence {
        z: f64,
        rho: f64,
        beta: f64,
        max_terms: usize,
    },

    #[error(
        "Wright series lost precision (z = {z}, rho = {rho}, beta = {beta}): estimated relative error {estimate:e}"
    )]
    PrecisionLoss { z: f64, rho: f64, beta: f64, estimate: f64 },

    #[error("quadrature for W(-{x}; -{nu}; {beta}) did not reach tolerance (error estimate {estimate:e})")]
    QuadratureFailure { x: f64, nu: f64, beta: f64, estimate: f64 },

    #[error("F2 diverges at x = {x}: Wright denominator underflowed")]
    Underflow { x: f64 },

    #[error("{what} is singular at x = {x} (requires x > 0)")]
    Singularity { what: &'static str, x: f64 },

    #[error("point (x = {x}, t = {t}) is outside the {region}")]
    Domain { x: f64, t: f64, region: &'static str },

    #[error(
        "subcritical flux: q0 = {q0} <= q_crit = {q_crit}; the data only define a heat conduction problem for the solid (no instantaneous phase change)"
    )]
    SubcriticalFlux { q0: f64, q_crit: f64 },

    #[error(
        "supercritical flux: q0 = {q0} > q_crit = {q_crit}; the conduction solution does not describe these data (melting starts at t = 0+)"
    )]
    SupercriticalFlux { q0: f64, q_crit: f64 },

    #[error("no sign change of the root function found on the scan grid ({detail})")]
    NoBracket { detail: String },

    #[error("invalid time grid: {0}")]
    Grid(String),

    #[error("operation not available for this solution: {0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
