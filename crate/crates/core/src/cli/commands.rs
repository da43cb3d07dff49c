use super::config::{Format, RunConfig};
use super::output::{json, key_values, num, opt, write_file, Csv};
use super::CliError;
use crate::analysis::{
    chain_inequality_margins, equivalence_reverse, equivalence_roundtrip, f2_monotonicity_scan, ProblemGenerator,
    Roundtrip, ScanReport,
};
use crate::similarity::{
    critical_flux, flux_from_temperature, solve_classical_flux, solve_flux, solve_temperature, FluxProblem, Problem,
    SimilaritySolution, SolutionKind,
};
use crate::verify::{alpha_limit_scan, residual_report, ReportConfig};
use serde::Serialize;

/// What a command hands back: text for stdout and, if a gate failed, its
/// description.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub gate_failure: Option<String>,
}

pub fn solve(cfg: &RunConfig) -> Result<SimilaritySolution, CliError> {
    let sol = match cfg.problem()? {
        Problem::Flux(p) if cfg.classical => solve_classical_flux(&p, cfg.tol)?,
        Problem::Flux(p) => solve_flux(&p, cfg.tol)?,
        Problem::Temperature(p) => solve_temperature(&p, cfg.tol)?,
    };
    Ok(sol)
}

fn q_crit(sol: &SimilaritySolution) -> Result<f64, CliError> {
    Ok(match sol.problem() {
        Problem::Flux(p) => critical_flux(p),
        Problem::Temperature(p) => critical_flux(&flux_from_temperature(p, 1.0)?),
    })
}

#[derive(Serialize)]
struct Summary {
    command: String,
    kind: SolutionKind,
    alpha: f64,
    mu: f64,
    residual: f64,
    q_crit: f64,
    q0: f64,
    t0: f64,
    lambda: f64,
    lambda_s: f64,
    lambda_l: f64,
    c_alpha: f64,
    warnings: Vec<String>,
}

pub fn cmd_solve(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let sol = solve(cfg)?;
    let d = sol.params();
    // the dual of the given face condition
    let (q0, t0) = match sol.problem() {
        Problem::Flux(p) => (p.q0(), sol.face_temperature()),
        Problem::Temperature(p) => (sol.face_flux_coefficient()?, p.t0()),
    };
    let s = Summary {
        command: cfg.command.clone(),
        kind: sol.kind(),
        alpha: sol.alpha(),
        mu: sol.mu(),
        residual: sol.residual(),
        q_crit: q_crit(&sol)?,
        q0,
        t0,
        lambda: d.lambda,
        lambda_s: d.lambda_s,
        lambda_l: d.lambda_l,
        c_alpha: d.c_alpha,
        warnings: sol.warnings().to_vec(),
    };
    let stdout = match cfg.format {
        Format::Json => json(&s),
        Format::Csv => key_values(&[
            ("alpha", num(s.alpha)),
            ("mu", num(s.mu)),
            ("residual", num(s.residual)),
            ("q_crit", num(s.q_crit)),
            ("q0", num(s.q0)),
            ("t0", num(s.t0)),
            ("lambda", num(s.lambda)),
            ("lambda_s", num(s.lambda_s)),
            ("lambda_l", num(s.lambda_l)),
            ("c_alpha", num(s.c_alpha)),
            ("warnings", s.warnings.join("; ").replace(',', ";")),
        ]),
    };
    Ok(Outcome {
        stdout,
        gate_failure: None,
    })
}

#[derive(Serialize)]
struct ProfileRow {
    x: f64,
    t: f64,
    phase: &'static str,
    temperature: f64,
}

#[derive(Serialize)]
struct FrontRow {
    t: f64,
    r_t: f64,
}

pub fn cmd_profile(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let sol = solve(cfg)?;
    let ts: Vec<f64> = (1..=cfg.t_points)
        .map(|i| cfg.t_max * i as f64 / cfg.t_points as f64)
        .collect();
    let x_end = cfg.x_extent * sol.front_position(cfg.t_max);
    let xs: Vec<f64> = (0..cfg.x_points)
        .map(|j| x_end * j as f64 / (cfg.x_points - 1) as f64)
        .collect();
    let mut rows = Vec::with_capacity(ts.len() * xs.len());
    for &t in &ts {
        for &x in &xs {
            let (phase, temperature) = sol.temperature(x, t)?;
            rows.push(ProfileRow {
                x,
                t,
                phase: phase.as_str(),
                temperature,
            });
        }
    }
    let front: Vec<FrontRow> = ts
        .iter()
        .map(|&t| FrontRow {
            t,
            r_t: sol.front_position(t),
        })
        .collect();
    let files = match cfg.format {
        Format::Csv => {
            let mut p = Csv::new(&["x", "t", "phase", "temperature"]);
            for r in &rows {
                p.row(&[num(r.x), num(r.t), r.phase.to_string(), num(r.temperature)]);
            }
            let mut f = Csv::new(&["t", "r_t"]);
            for r in &front {
                f.row(&[num(r.t), num(r.r_t)]);
            }
            write_file(&cfg.out, "profile.csv", &p.into_string())?;
            write_file(&cfg.out, "front.csv", &f.into_string())?;
            vec!["profile.csv", "front.csv"]
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Profile<'a> {
                profile: &'a [ProfileRow],
                front: &'a [FrontRow],
            }
            write_file(
                &cfg.out,
                "profile.json",
                &json(&Profile {
                    profile: &rows,
                    front: &front,
                }),
            )?;
            vec!["profile.json"]
        }
    };
    #[derive(Serialize)]
    struct Written {
        mu: f64,
        rows: usize,
        files: Vec<&'static str>,
    }
    Ok(Outcome {
        stdout: json(&Written {
            mu: sol.mu(),
            rows: rows.len(),
            files,
        }),
        gate_failure: None,
    })
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let sol = solve(cfg)?;
    let report = residual_report(&sol, &ReportConfig::default())?;
    let failed: Vec<String> = report
        .failed_gates()
        .iter()
        .map(|g| {
            let rel = if g.at_least { ">=" } else { "<" };
            format!("{}: {:e} (needs {rel} {:e})", g.name, g.value, g.threshold)
        })
        .collect();
    Ok(Outcome {
        stdout: json(&report),
        gate_failure: (!failed.is_empty()).then(|| failed.join("; ")),
    })
}

/// α values of the published F_{2α} monotonicity figures; a violation here is
/// a regression.
pub const FIGURE_ALPHAS: [f64; 9] = [
    1.0 / 16.0,
    1.0 / 8.0,
    1.0 / 4.0,
    3.0 / 8.0,
    1.0 / 2.0,
    5.0 / 8.0,
    3.0 / 4.0,
    7.0 / 8.0,
    15.0 / 16.0,
];

const CHAIN_ALPHAS: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
const LIMIT_ALPHAS: [f64; 5] = [0.5, 0.9, 0.99, 0.999, 1.0];
const EQUIVALENCE_TOL: f64 = 1e-10;
const TEMPERATURE_TOL: f64 = 1e-9;

#[derive(Serialize)]
struct F2Verdict {
    alpha: f64,
    figure_set: bool,
    monotone: bool,
    min_relative_margin: f64,
    consistent: bool,
    truncated_at: Option<f64>,
}

#[derive(Serialize)]
struct ChainVerdict {
    all_positive: bool,
    min_m1: f64,
    min_m2: f64,
    min_m3: f64,
}

#[derive(Serialize)]
struct LimitVerdict {
    classical_mu: f64,
    gap_at_0999: Option<f64>,
    threshold: f64,
    passed: bool,
}

#[derive(Serialize)]
struct EquivalenceVerdict {
    samples: usize,
    max_gap: f64,
    max_temperature_diff: f64,
    passed: bool,
}

#[derive(Serialize)]
struct Verdicts {
    seed: u64,
    f2: Vec<F2Verdict>,
    chain: ChainVerdict,
    alpha_limit: LimitVerdict,
    equivalence: EquivalenceVerdict,
    regressions: Vec<String>,
}

fn flux_problem_of(cfg: &RunConfig) -> Result<FluxProblem, CliError> {
    Ok(match cfg.problem()? {
        Problem::Flux(p) => p,
        Problem::Temperature(p) => {
            let q0 = solve_temperature(&p, cfg.tol)?.face_flux_coefficient()?;
            flux_from_temperature(&p, q0)?
        }
    })
}

pub fn cmd_scan(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut regressions = Vec::new();

    let mut alphas: Vec<(f64, bool)> = FIGURE_ALPHAS.iter().map(|&a| (a, true)).collect();
    alphas.extend(cfg.scan_alphas.iter().map(|&a| (a, false)));
    let mut scans: Vec<(ScanReport, bool)> = Vec::new();
    for (a, fig) in alphas {
        scans.push((f2_monotonicity_scan(a, cfg.scan_x_max, cfg.scan_points)?, fig));
    }
    let f2: Vec<F2Verdict> = scans
        .iter()
        .map(|(s, fig)| F2Verdict {
            alpha: s.alpha,
            figure_set: *fig,
            monotone: s.monotone,
            min_relative_margin: s.min_relative_margin(),
            consistent: s.consistent(),
            truncated_at: s.truncated_at,
        })
        .collect();
    for v in f2.iter().filter(|v| v.figure_set) {
        if !v.monotone || v.min_relative_margin <= 0.0 {
            regressions.push(format!("f2 monotonicity at alpha = {}", v.alpha));
        }
    }

    let grid = &scans[0].0.grid;
    let mut chain_rows = Vec::new();
    for &a in &CHAIN_ALPHAS {
        for &x in grid {
            let (m1, m2, m3) = chain_inequality_margins(x, a)?;
            chain_rows.push((a, x, m1, m2, m3));
        }
    }
    let min = |f: fn(&(f64, f64, f64, f64, f64)) -> f64| chain_rows.iter().map(f).fold(f64::INFINITY, f64::min);
    let chain = ChainVerdict {
        min_m1: min(|r| r.2),
        min_m2: min(|r| r.3),
        min_m3: min(|r| r.4),
        all_positive: chain_rows.iter().all(|r| r.2 > 0.0 && r.3 > 0.0 && r.4 > 0.0),
    };
    if !chain.all_positive {
        regressions.push("chain inequality".into());
    }

    let limit = alpha_limit_scan(&flux_problem_of(cfg)?, &LIMIT_ALPHAS)?;
    let gap_at_0999 = limit.rows.iter().find(|r| r.alpha == 0.999).and_then(|r| r.gap);
    let alpha_limit = LimitVerdict {
        classical_mu: limit.classical_mu,
        gap_at_0999,
        threshold: cfg.alpha_limit_gap,
        passed: gap_at_0999.is_some_and(|g| g < cfg.alpha_limit_gap),
    };
    if !alpha_limit.passed {
        regressions.push("alpha -> 1 limit".into());
    }

    let mut gen = ProblemGenerator::new(cfg.seed);
    let mut eq_rows: Vec<(&'static str, f64, Roundtrip)> = Vec::new();
    for _ in 0..cfg.scan_samples {
        let p = gen.flux_problem()?;
        eq_rows.push((
            "flux_to_temperature",
            p.alpha(),
            equivalence_roundtrip(&p, EQUIVALENCE_TOL)?,
        ));
        let tp = gen.temperature_problem()?;
        eq_rows.push((
            "temperature_to_flux",
            tp.alpha(),
            equivalence_reverse(&tp, EQUIVALENCE_TOL)?,
        ));
    }
    let max_gap = eq_rows.iter().map(|r| r.2.gap).fold(0.0, f64::max);
    let max_temperature_diff = eq_rows.iter().map(|r| r.2.max_temperature_diff).fold(0.0, f64::max);
    let equivalence = EquivalenceVerdict {
        samples: eq_rows.len(),
        max_gap,
        max_temperature_diff,
        passed: max_gap < EQUIVALENCE_TOL && max_temperature_diff < TEMPERATURE_TOL,
    };
    if !equivalence.passed {
        regressions.push("flux/temperature equivalence".into());
    }

    let verdicts = Verdicts {
        seed: cfg.seed,
        f2,
        chain,
        alpha_limit,
        equivalence,
        regressions,
    };

    match cfg.format {
        Format::Csv => {
            let mut c = Csv::new(&["alpha", "x", "f2", "turan_margin", "relative_margin"]);
            for (s, _) in &scans {
                for i in 0..s.grid.len() {
                    c.row(&[
                        num(s.alpha),
                        num(s.grid[i]),
                        num(s.values[i]),
                        num(s.margins[i]),
                        num(s.relative_margins[i]),
                    ]);
                }
            }
            write_file(&cfg.out, "f2_scan.csv", &c.into_string())?;
            let mut c = Csv::new(&["alpha", "x", "m1", "m2", "m3"]);
            for r in &chain_rows {
                c.row(&[num(r.0), num(r.1), num(r.2), num(r.3), num(r.4)]);
            }
            write_file(&cfg.out, "chain.csv", &c.into_string())?;
            let mut c = Csv::new(&["alpha", "mu", "gap", "error"]);
            for r in &limit.rows {
                let err = r.error.clone().unwrap_or_default().replace(',', ";");
                c.row(&[num(r.alpha), opt(r.mu), opt(r.gap), err]);
            }
            write_file(&cfg.out, "alpha_limit.csv", &c.into_string())?;
            let mut c = Csv::new(&[
                "direction",
                "alpha",
                "q0",
                "t0",
                "mu",
                "xi",
                "gap",
                "max_temperature_diff",
            ]);
            for (dir, a, r) in &eq_rows {
                c.row(&[
                    dir.to_string(),
                    num(*a),
                    num(r.q0),
                    num(r.t0),
                    num(r.mu),
                    num(r.xi),
                    num(r.gap),
                    num(r.max_temperature_diff),
                ]);
            }
            write_file(&cfg.out, "equivalence.csv", &c.into_string())?;
            write_file(&cfg.out, "scan.json", &json(&verdicts))?;
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Full<'a> {
                verdicts: &'a Verdicts,
                f2: Vec<&'a ScanReport>,
                alpha_limit: &'a crate::verify::AlphaScan,
            }
            let full = Full {
                verdicts: &verdicts,
                f2: scans.iter().map(|(s, _)| s).collect(),
                alpha_limit: &limit,
            };
            write_file(&cfg.out, "scan.json", &json(&full))?;
        }
    }
    let gate_failure = (!verdicts.regressions.is_empty()).then(|| verdicts.regressions.join("; "));
    Ok(Outcome {
        stdout: json(&verdicts),
        gate_failure,
    })
}
