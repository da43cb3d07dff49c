use crate::error::{invalid, Error, Result};
use crate::special_functions::reciprocal_gamma;

/// L1 approximation of the Caputo derivative D^α f(t_N) from samples
/// f(0), f(h), ..., f(Nh) on a uniform grid:
///
/// D^α f(t_N) ≈ h^{-α}/Γ(2-α) Σ_{j=0}^{N-1} b_j (f_{N-j} - f_{N-j-1}),
/// b_j = (j+1)^{1-α} - j^{1-α}.
///
/// The error is O(h^{2-α}) for smooth f. At α = 1 only b_0 survives and the
/// scheme is the backward difference.
pub fn caputo_l1(samples: &[f64], h: f64, alpha: f64) -> Result<f64> {
    if samples.len() < 2 {
        return Err(Error::Grid(format!("need at least 2 samples, got {}", samples.len())));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::Grid(format!("step must be finite and > 0, got {h}")));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid("alpha", format!("must lie in (0, 1], got {alpha}")));
    }
    let n = samples.len() - 1;
    let e = 1.0 - alpha;
    // compensated sum; the largest weights sit next to t_N
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut prev = 0.0f64; // j^{1-α}
    for j in 0..n {
        let next = ((j + 1) as f64).powf(e);
        let b = next - prev;
        prev = next;
        let term = b * (samples[n - j] - samples[n - j - 1]);
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum * reciprocal_gamma(2.0 - alpha) / h.powf(alpha))
}
