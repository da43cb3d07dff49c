//! Independent checks that an assembled solution satisfies the fractional
//! PDE (L1 Caputo quadrature), the boundary data and the Stefan condition.

mod caputo;
mod forms;
mod residual;

pub use caputo::caputo_l1;
pub use forms::{
    alpha_limit_scan, g_alpha_lambda_l_form, lambda_l_form_pin, predicted_stefan_residual, AlphaRow, AlphaScan, FormPin,
};
pub use residual::{
    boundary_residuals, conduction_convergence, conduction_pde_residual, pde_convergence, pde_residual,
    residual_report, stefan_residual, stefan_sample, ConvergenceRecord, Gate, PdeSample, ReportConfig, ResidualReport,
    StefanSample, BOUNDARY_GATE, ORDER_SLACK, STEFAN_GATE,
};
