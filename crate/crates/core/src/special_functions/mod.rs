//! Gamma, error, Wright and Mainardi functions.

mod dd;
mod gamma;
mod quadrature;
mod wright;

pub use gamma::{gamma, reciprocal_gamma};
pub use wright::{SeriesConfig, WrightArgs, WRIGHT_ACCURACY_ENVELOPE};

pub(crate) use wright::{one_minus_wright, wright_scaled, Scaled};

use crate::error::{invalid, Result};

/// The error function.
pub fn erf(x: f64) -> f64 {
    libm::erf(x)
}

/// The complementary error function 1 - erf(x), accurate in the tail.
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

/// W(z; ρ; β) = Σ zⁿ / (n! Γ(ρn + β)).
pub fn wright(args: WrightArgs, cfg: &SeriesConfig) -> Result<f64> {
    wright::wright_value(&args, cfg)
}

/// ∂W/∂z (z; ρ; β) = W(z; ρ; β + ρ).
pub fn wright_dz(args: WrightArgs, cfg: &SeriesConfig) -> Result<f64> {
    wright(
        WrightArgs {
            beta: args.beta + args.rho,
            ..args
        },
        cfg,
    )
}

fn mainardi_args(x: f64, rho: f64) -> Result<WrightArgs> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(invalid("x", format!("must be finite and >= 0, got {x}")));
    }
    if !(rho > 0.0 && rho < 1.0) {
        return Err(invalid("rho", format!("must lie in (0, 1), got {rho}")));
    }
    WrightArgs::new(-x, -rho, 1.0 - rho)
}

/// Mainardi function M_ρ(x) = W(-x; -ρ; 1 - ρ), x >= 0.
pub fn mainardi(x: f64, rho: f64, cfg: &SeriesConfig) -> Result<f64> {
    wright(mainardi_args(x, rho)?, cfg)
}

pub(crate) fn mainardi_scaled(x: f64, rho: f64, cfg: &SeriesConfig) -> Result<Scaled> {
    wright_scaled(&mainardi_args(x, rho)?, cfg)
}

/// W(-x; -ρ; 1) as a scaled value, x >= 0.
pub(crate) fn wright_neg_scaled(x: f64, rho: f64, cfg: &SeriesConfig) -> Result<Scaled> {
    wright_scaled(&WrightArgs::new(-x, -rho, 1.0)?, cfg)
}
