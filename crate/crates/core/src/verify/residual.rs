use super::caputo::caputo_l1;
use crate::error::{invalid, Error, Result};
use crate::similarity::{ConductionSolution, Phase, Problem, SimilaritySolution};
use serde::Serialize;
use std::collections::BTreeMap;

/// Gate on boundary residuals (kelvin, or relative for the face flux).
pub const BOUNDARY_GATE: f64 = 1e-9;
/// Gate on the relative Stefan residual.
pub const STEFAN_GATE: f64 = 1e-10;
/// Slack subtracted from the nominal L1 order 2 - α.
pub const ORDER_SLACK: f64 = 0.3;
/// Sample points with x/(λ t^{α/2}) below this are not resolved by uniform
/// steps down to t/256: the profile rises over τ ~ t·η^{2/α}, and the
/// observed order there is pre-asymptotic (close to 1).
pub const RESOLVED_ETA: f64 = 1.5;

/// A temperature field Θ = offset + v(x, t) whose variable part solves
/// D^α v = λ² v_xx. Only v enters the residual.
trait Field {
    fn alpha(&self) -> f64;
    fn lambda(&self) -> f64;
    fn variable(&self, x: f64, t: f64) -> Result<f64>;
}

struct PhaseField<'a> {
    sol: &'a SimilaritySolution,
    phase: Phase,
}

impl Field for PhaseField<'_> {
    fn alpha(&self) -> f64 {
        self.sol.alpha()
    }
    fn lambda(&self) -> f64 {
        let d = self.sol.params();
        match self.phase {
            Phase::Liquid => d.lambda_l,
            Phase::Solid => d.lambda_s,
        }
    }
    fn variable(&self, x: f64, t: f64) -> Result<f64> {
        // extend mode: the formula on the whole quadrant
        self.sol.theta(self.phase, x, t, true)?;
        Ok(self.sol.theta_parts(self.phase, x, t)?.1)
    }
}

impl Field for ConductionSolution {
    fn alpha(&self) -> f64 {
        self.alpha
    }
    fn lambda(&self) -> f64 {
        self.lambda_s
    }
    fn variable(&self, x: f64, t: f64) -> Result<f64> {
        self.variable_part(x, t)
    }
}

fn steps(t: f64, h: f64) -> Result<usize> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Grid(format!("time must be finite and > 0, got {t}")));
    }
    if !(h > 0.0 && h <= t) {
        return Err(Error::Grid(format!("time step must lie in (0, t], got {h}")));
    }
    let n = (t / h).round();
    if (n * h - t).abs() > 1e-9 * t {
        return Err(Error::Grid(format!("t = {t} is not a multiple of h = {h}")));
    }
    Ok(n as usize)
}

fn space_term<F: Field>(f: &F, x: f64, t: f64, hs: f64) -> Result<f64> {
    if !(hs > 0.0 && x - hs > 0.0) {
        return Err(invalid("h_space", format!("need 0 < h_space < x, got {hs} at x = {x}")));
    }
    let l = f.lambda();
    let d2 = (f.variable(x + hs, t)? - 2.0 * f.variable(x, t)? + f.variable(x - hs, t)?) / (hs * hs);
    Ok(l * l * d2)
}

fn time_samples<F: Field>(f: &F, x: f64, h: f64, n: usize) -> Result<Vec<f64>> {
    (0..=n).map(|j| f.variable(x, j as f64 * h)).collect()
}

fn residual_of<F: Field>(f: &F, x: f64, t: f64, h: f64, hs: f64) -> Result<f64> {
    let n = steps(t, h)?;
    let s = time_samples(f, x, h, n)?;
    Ok((caputo_l1(&s, h, f.alpha())? - space_term(f, x, t, hs)?).abs())
}

/// |L1 Caputo derivative - λ² · central second difference| of one phase
/// formula at (x, t), with t a multiple of `h_time` and 0 < h_space < x.
///
/// The formula is sampled on all of [0, t], across the front if need be.
pub fn pde_residual(sol: &SimilaritySolution, phase: Phase, x: f64, t: f64, h_time: f64, h_space: f64) -> Result<f64> {
    residual_of(&PhaseField { sol, phase }, x, t, h_time, h_space)
}

/// Same as [`pde_residual`] for the no-phase-change conduction solution.
pub fn conduction_pde_residual(cs: &ConductionSolution, x: f64, t: f64, h_time: f64, h_space: f64) -> Result<f64> {
    residual_of(cs, x, t, h_time, h_space)
}

/// PDE residuals at (x, t) for h = t·2^{-k}, k over `levels`, and the
/// observed order.
#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceRecord {
    pub label: String,
    pub x: f64,
    pub t: f64,
    /// x / (λ t^{α/2}) of the sampled formula
    pub eta: f64,
    /// eta >= RESOLVED_ETA; only resolved records enter the order gate
    pub resolved: bool,
    pub h: Vec<f64>,
    pub residuals: Vec<f64>,
    /// log2 of successive residual ratios, one per (h, h/2) pair
    pub pair_orders: Vec<f64>,
    /// least-squares slope of ln(residual) against ln(h); None when fewer
    /// than two residuals are nonzero
    pub order: Option<f64>,
}

fn fit_order(h: &[f64], r: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = h
        .iter()
        .zip(r)
        .filter(|(_, &v)| v > 0.0)
        .map(|(&h, &v)| (h.ln(), v.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some(sxy / sxx)
}

fn convergence_of<F: Field>(
    f: &F,
    label: String,
    x: f64,
    t: f64,
    levels: &[u32],
    hs: f64,
) -> Result<ConvergenceRecord> {
    let finest = *levels
        .iter()
        .max()
        .ok_or_else(|| Error::Grid("no refinement levels".into()))?;
    if finest > 20 {
        return Err(Error::Grid(format!("refinement level {finest} is too deep")));
    }
    let n = 1usize << finest;
    let fine = time_samples(f, x, t / n as f64, n)?;
    let space = space_term(f, x, t, hs)?;
    let mut h = Vec::with_capacity(levels.len());
    let mut residuals = Vec::with_capacity(levels.len());
    for &k in levels {
        let stride = 1usize << (finest - k);
        let s: Vec<f64> = fine.iter().step_by(stride).copied().collect();
        let hk = t / (1u64 << k) as f64;
        residuals.push((caputo_l1(&s, hk, f.alpha())? - space).abs());
        h.push(hk);
    }
    let pair_orders = residuals.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    let order = fit_order(&h, &residuals);
    let eta = x / (f.lambda() * t.powf(f.alpha() / 2.0));
    Ok(ConvergenceRecord {
        label,
        x,
        t,
        eta,
        resolved: eta >= RESOLVED_ETA,
        h,
        residuals,
        pair_orders,
        order,
    })
}

/// Refinement study of one phase formula at (x, t); h_space = 1e-4 r(t).
pub fn pde_convergence(
    sol: &SimilaritySolution,
    phase: Phase,
    x: f64,
    t: f64,
    levels: &[u32],
) -> Result<ConvergenceRecord> {
    let hs = 1e-4 * sol.front_position(t);
    convergence_of(&PhaseField { sol, phase }, phase.as_str().into(), x, t, levels, hs)
}

/// Refinement study of the conduction solution; h_space = 1e-4 λ_s t^{α/2}.
pub fn conduction_convergence(cs: &ConductionSolution, x: f64, t: f64, levels: &[u32]) -> Result<ConvergenceRecord> {
    let hs = 1e-4 * cs.lambda_s * t.powf(cs.alpha / 2.0);
    convergence_of(cs, "conduction".into(), x, t, levels, hs)
}

/// Absolute and relative residual of the Stefan condition at time t.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct StefanSample {
    pub t: f64,
    pub value: f64,
    /// value over the sum of the magnitudes of the three terms
    pub relative: f64,
}

fn stefan_parts(sol: &SimilaritySolution, t: f64) -> Result<[f64; 3]> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain {
            x: f64::NAN,
            t,
            region: "t > 0",
        });
    }
    let m = sol.problem().medium();
    let d = sol.params();
    let r = sol.front_position(t);
    let gs = sol.temperature_gradient(Phase::Solid, r, t, true)?;
    let gl = sol.temperature_gradient(Phase::Liquid, r, t, true)?;
    // ρ l D^α r(t), D^α t^{α/2} = c_α t^{-α/2}
    let front = m.density * m.latent_heat * sol.mu() * d.lambda_s * d.c_alpha * t.powf(-m.alpha / 2.0);
    Ok([m.solid.k * gs, m.liquid.k * gl, front])
}

/// |k_s Θ_s,x(r, t) - k_l Θ_l,x(r, t) - ρ l D^α r(t)| with analytic gradients.
///
/// Equals ρ l λ_s t^{-α/2} |G_α(μ) - c_α μ| (or F_α for the temperature kind).
pub fn stefan_residual(sol: &SimilaritySolution, t: f64) -> Result<f64> {
    let [s, l, f] = stefan_parts(sol, t)?;
    Ok((s - l - f).abs())
}

pub fn stefan_sample(sol: &SimilaritySolution, t: f64) -> Result<StefanSample> {
    let [s, l, f] = stefan_parts(sol, t)?;
    let value = (s - l - f).abs();
    Ok(StefanSample {
        t,
        value,
        relative: value / (s.abs() + l.abs() + f.abs()),
    })
}

/// Boundary, interface and far-field residuals, each maximised over
/// `t_samples`:
///
/// - `flux_at_0`: |k_l Θ_l,x(0, t) t^{α/2} + q₀| / q₀ (relative, so the
///   gate does not depend on the flux units)
/// - `interface_liquid`, `interface_solid`: |Θ(r(t), t) - T_m|
/// - `far_field`: |Θ_s(x_far, t) - T_i|
/// - `face_temperature` (temperature kind only): |Θ_l(0, t) - T₀|
pub fn boundary_residuals(sol: &SimilaritySolution, t_samples: &[f64], x_far: f64) -> Result<BTreeMap<String, f64>> {
    let t_max = t_samples.iter().copied().fold(f64::NAN, f64::max);
    if t_samples.is_empty() || t_samples.iter().any(|&t| !(t > 0.0 && t.is_finite())) {
        return Err(invalid("t_samples", "need at least one finite time > 0"));
    }
    if !(x_far > sol.front_position(t_max)) || !x_far.is_finite() {
        return Err(invalid(
            "x_far",
            format!("must exceed r(max t) = {}", sol.front_position(t_max)),
        ));
    }
    let m = sol.problem().medium();
    let q0 = sol.face_flux_coefficient()?;
    let mut out = BTreeMap::new();
    let mut put = |k: &str, v: f64| {
        let e = out.entry(k.to_string()).or_insert(0.0f64);
        *e = e.max(v);
    };
    for &t in t_samples {
        let r = sol.front_position(t);
        let g0 = sol.temperature_gradient(Phase::Liquid, 0.0, t, false)?;
        put("flux_at_0", (m.liquid.k * g0 * t.powf(m.alpha / 2.0) + q0).abs() / q0);
        put(
            "interface_liquid",
            (sol.theta(Phase::Liquid, r, t, false)? - m.melting_temperature).abs(),
        );
        put(
            "interface_solid",
            (sol.theta(Phase::Solid, r, t, false)? - m.melting_temperature).abs(),
        );
        put(
            "far_field",
            (sol.theta(Phase::Solid, x_far, t, false)? - m.initial_temperature).abs(),
        );
        if let Problem::Temperature(p) = sol.problem() {
            put(
                "face_temperature",
                (sol.theta(Phase::Liquid, 0.0, t, false)? - p.t0()).abs(),
            );
        }
    }
    Ok(out)
}

/// Where and how the full report samples the solution.
#[derive(Clone, Debug, Serialize, serde::Deserialize)]
pub struct ReportConfig {
    /// times for the boundary and Stefan checks
    pub t_samples: Vec<f64>,
    /// far-field point: r(max t) + far_widths · λ_s (max t)^{α/2}
    pub far_widths: f64,
    /// time of the PDE refinement study
    pub pde_t: f64,
    /// liquid sample points as fractions of r(pde_t)
    pub liquid_points: Vec<f64>,
    /// solid sample points: distance beyond r(pde_t) in units of
    /// λ_s pde_t^{α/2}, so the solid η is at least the width
    pub solid_points: Vec<f64>,
    /// h = pde_t · 2^{-k}
    pub levels: Vec<u32>,
}

impl Default for ReportConfig {
    fn default() -> Self {
        ReportConfig {
            t_samples: vec![0.25, 1.0, 4.0, 16.0],
            far_widths: 60.0,
            pde_t: 1.0,
            liquid_points: vec![0.15, 0.3, 0.5, 0.7, 0.85],
            solid_points: vec![1.5, 2.0, 3.0, 4.0, 5.0],
            levels: vec![4, 5, 6, 7, 8],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PdeSample {
    pub phase: Phase,
    pub x: f64,
    pub t: f64,
    pub h: f64,
    pub value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Gate {
    pub name: String,
    pub value: f64,
    pub threshold: f64,
    /// true for lower bounds (orders), false for upper bounds (residuals)
    pub at_least: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualReport {
    /// residuals at the finest time step
    pub pde_residuals: Vec<PdeSample>,
    pub boundary_residuals: BTreeMap<String, f64>,
    pub stefan_residuals: Vec<StefanSample>,
    /// largest boundary residual or relative Stefan residual
    pub max_abs: f64,
    /// smallest observed order over the resolved refinement records
    pub convergence_rate: Option<f64>,
    pub convergence: Vec<ConvergenceRecord>,
    pub gates: Vec<Gate>,
}

impl ResidualReport {
    pub fn passed(&self) -> bool {
        self.gates.iter().all(|g| g.passed)
    }

    pub fn failed_gates(&self) -> Vec<&Gate> {
        self.gates.iter().filter(|g| !g.passed).collect()
    }
}

fn gate(name: &str, value: f64, threshold: f64, at_least: bool) -> Gate {
    let passed = if at_least {
        value >= threshold
    } else {
        value < threshold
    };
    Gate {
        name: name.into(),
        value,
        threshold,
        at_least,
        passed,
    }
}

/// Runs every check on a solved problem and collects the gates.
pub fn residual_report(sol: &SimilaritySolution, cfg: &ReportConfig) -> Result<ResidualReport> {
    let alpha = sol.alpha();
    let t_max = cfg.t_samples.iter().copied().fold(0.0, f64::max);
    let lambda_s = sol.params().lambda_s;
    let x_far = sol.front_position(t_max) + cfg.far_widths * lambda_s * t_max.powf(alpha / 2.0);
    let boundary = boundary_residuals(sol, &cfg.t_samples, x_far)?;
    let stefan = cfg
        .t_samples
        .iter()
        .map(|&t| stefan_sample(sol, t))
        .collect::<Result<Vec<_>>>()?;

    let r = sol.front_position(cfg.pde_t);
    let width = lambda_s * cfg.pde_t.powf(alpha / 2.0);
    let mut points: Vec<(Phase, f64)> = cfg.liquid_points.iter().map(|&f| (Phase::Liquid, f * r)).collect();
    if !sol.problem().is_one_phase() {
        // one-phase: the solid formula is constant and has nothing to refine
        points.extend(cfg.solid_points.iter().map(|&w| (Phase::Solid, r + w * width)));
    }
    let mut convergence = Vec::new();
    let mut pde = Vec::new();
    for (phase, x) in points {
        let rec = pde_convergence(sol, phase, x, cfg.pde_t, &cfg.levels)?;
        if let (Some(&h), Some(&v)) = (rec.h.last(), rec.residuals.last()) {
            pde.push(PdeSample {
                phase,
                x: rec.x,
                t: rec.t,
                h,
                value: v,
            });
        }
        convergence.push(rec);
    }
    let convergence_rate = convergence
        .iter()
        .filter(|c| c.resolved)
        .filter_map(|c| c.order)
        .fold(None, |m: Option<f64>, o| Some(m.map_or(o, |m| m.min(o))));

    let max_abs = boundary
        .values()
        .copied()
        .chain(stefan.iter().map(|s| s.relative))
        .fold(0.0, f64::max);

    let mut gates: Vec<Gate> = boundary
        .iter()
        .map(|(k, &v)| gate(k, v, BOUNDARY_GATE, false))
        .collect();
    let worst_stefan = stefan.iter().map(|s| s.relative).fold(0.0, f64::max);
    gates.push(gate("stefan", worst_stefan, STEFAN_GATE, false));
    if let Some(rate) = convergence_rate {
        gates.push(gate("pde_order", rate, (2.0 - alpha) - ORDER_SLACK, true));
    }
    // every record, resolved or not, must improve under each halving
    let decreasing = convergence
        .iter()
        .flat_map(|c| c.residuals.windows(2).map(|w| w[1] <= w[0]))
        .all(|b| b);
    gates.push(gate("pde_decreasing", if decreasing { 1.0 } else { 0.0 }, 1.0, true));
    let all_finite = pde.iter().all(|p| p.value.is_finite()) && max_abs.is_finite();
    gates.push(gate("finite", if all_finite { 1.0 } else { 0.0 }, 1.0, true));

    Ok(ResidualReport {
        pde_residuals: pde,
        boundary_residuals: boundary,
        stefan_residuals: stefan,
        max_abs,
        convergence_rate,
        convergence,
        gates,
    })
}
