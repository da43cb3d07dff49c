//! Numerical probes: monotonicity of F_{2α}, the flux/temperature
//! equivalence and the interface inequality.

mod equivalence;
mod generator;
mod monotonicity;

pub use equivalence::{
    equivalence_reverse, equivalence_roundtrip, interface_inequality, interface_inequality_check, InterfaceCheck,
    Roundtrip,
};
pub use generator::ProblemGenerator;
pub use monotonicity::{
    chain_inequality_margins, f2_monotonicity_scan, f2_scan_range, turan_margin, turan_relative_margin, ScanReport,
    Violation, SCAN_X_MIN,
};
