use super::CliError;
use crate::error::invalid;
use crate::similarity::{make_one_phase, FaceCondition, FluxProblem, Material, Medium, Problem, TemperatureProblem};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "fracstefan",
    version,
    about = "Similarity solutions of the two-phase fractional Stefan problem"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve for the front coefficient and print a summary
    Solve(Flags),
    /// Tabulate temperatures and the front position
    Profile(Flags),
    /// Residual checks of the solved problem (exit 5 if a gate fails)
    Verify(Flags),
    /// Monotonicity, chain inequality, α → 1 and equivalence scans
    Scan(Flags),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Solve(_) => "solve",
            Command::Profile(_) => "profile",
            Command::Verify(_) => "verify",
            Command::Scan(_) => "scan",
        }
    }

    pub fn flags(&self) -> &Flags {
        match self {
            Command::Solve(f) | Command::Profile(f) | Command::Verify(f) | Command::Scan(f) => f,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// Command-line overrides; anything left out falls back to the config file,
/// then to the built-in defaults.
#[derive(Args, Debug, Default, Clone)]
pub struct Flags {
    /// JSON config file
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Print the resolved configuration as JSON and exit
    #[arg(long)]
    pub print_config: bool,
    /// Order of the time derivative, in (0, 1]
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Flux coefficient at the face (flux problem)
    #[arg(long)]
    pub q0: Option<f64>,
    /// Face temperature (temperature problem)
    #[arg(long)]
    pub t0: Option<f64>,
    /// Initial temperature of the solid
    #[arg(long)]
    pub ti: Option<f64>,
    /// Melting temperature
    #[arg(long)]
    pub tm: Option<f64>,
    /// Thermal conductivity of the solid
    #[arg(long)]
    pub ks: Option<f64>,
    /// Specific heat of the solid
    #[arg(long)]
    pub cs: Option<f64>,
    /// Thermal conductivity of the liquid
    #[arg(long)]
    pub kl: Option<f64>,
    /// Specific heat of the liquid
    #[arg(long)]
    pub cl: Option<f64>,
    /// Density (both phases)
    #[arg(long)]
    pub rho: Option<f64>,
    /// Latent heat of fusion
    #[arg(long)]
    pub latent: Option<f64>,
    /// Solid initially at the melting temperature
    #[arg(long)]
    pub one_phase: bool,
    /// Use the erf/erfc solver (needs alpha = 1 and a flux problem)
    #[arg(long)]
    pub classical: bool,
    /// Tolerance on the relative root residual
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output directory
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Output format (default csv)
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Seed of the random problem generator (scan)
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Fully resolved run configuration. Also the schema of `--config` files,
/// where every field is optional.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub command: String,
    pub alpha: f64,
    pub q0: Option<f64>,
    pub t0: Option<f64>,
    pub ti: f64,
    pub tm: f64,
    pub ks: f64,
    pub cs: f64,
    pub kl: f64,
    pub cl: f64,
    pub rho: f64,
    pub latent: f64,
    pub one_phase: bool,
    pub classical: bool,
    pub tol: f64,
    pub out: PathBuf,
    pub format: Format,
    pub seed: u64,
    /// profile grid: x in [0, x_extent · r(t_max)], t in (0, t_max]
    pub x_points: usize,
    pub x_extent: f64,
    pub t_points: usize,
    pub t_max: f64,
    /// F_{2α} scan grid
    pub scan_x_max: f64,
    pub scan_points: usize,
    /// extra α values for the monotonicity scan (findings, not gates)
    pub scan_alphas: Vec<f64>,
    /// problems drawn for the equivalence scan
    pub scan_samples: usize,
    /// gate on |μ_0.999 - μ_1| in the α → 1 scan
    pub alpha_limit_gap: f64,
}

/// Ice melting into water, SI units.
impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            command: String::new(),
            alpha: 0.7,
            q0: None,
            t0: None,
            ti: 263.15,
            tm: 273.15,
            ks: 2.22,
            cs: 2050.0,
            kl: 0.556,
            cl: 4186.0,
            rho: 1000.0,
            latent: 334_000.0,
            one_phase: false,
            classical: false,
            tol: 1e-12,
            out: PathBuf::from("."),
            format: Format::Csv,
            seed: 0,
            x_points: 50,
            x_extent: 3.0,
            t_points: 10,
            t_max: 10.0,
            scan_x_max: 20.0,
            scan_points: 200,
            scan_alphas: Vec::new(),
            scan_samples: 20,
            alpha_limit_gap: 1e-2,
        }
    }
}

pub const DEFAULT_Q0: f64 = 50_000.0;

impl RunConfig {
    /// Defaults, then the config file, then the flags.
    pub fn resolve(command: &str, flags: &Flags) -> Result<RunConfig, CliError> {
        let mut cfg = match &flags.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                    path: path.clone(),
                    source: e,
                })?;
                serde_json::from_str::<RunConfig>(&text)
                    .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?
            }
            None => RunConfig::default(),
        };
        cfg.command = command.to_string();
        macro_rules! set {
            ($($f:ident),*) => { $( if let Some(v) = flags.$f { cfg.$f = v; } )* };
        }
        set!(alpha, ti, tm, ks, cs, kl, cl, rho, latent, tol, format, seed);
        if let Some(o) = &flags.out {
            cfg.out = o.clone();
        }
        // a face condition given on the command line replaces the file's
        match (flags.q0, flags.t0) {
            (Some(q), Some(t)) => {
                cfg.q0 = Some(q);
                cfg.t0 = Some(t);
            }
            (Some(q), None) => {
                cfg.q0 = Some(q);
                cfg.t0 = None;
            }
            (None, Some(t)) => {
                cfg.t0 = Some(t);
                cfg.q0 = None;
            }
            (None, None) => {}
        }
        if cfg.q0.is_none() && cfg.t0.is_none() {
            cfg.q0 = Some(DEFAULT_Q0);
        }
        cfg.one_phase |= flags.one_phase;
        cfg.classical |= flags.classical;
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.q0.is_some() && self.t0.is_some() {
            return Err(invalid("q0/t0", "give either a face flux q0 or a face temperature t0, not both").into());
        }
        if self.classical {
            if self.alpha != 1.0 {
                return Err(invalid("classical", format!("needs alpha = 1, got {}", self.alpha)).into());
            }
            if self.t0.is_some() {
                return Err(invalid("classical", "the erf/erfc solver handles flux problems only").into());
            }
        }
        if self.x_points < 2 || self.t_points < 1 {
            return Err(invalid("x_points/t_points", "need x_points >= 2 and t_points >= 1").into());
        }
        if !(self.x_extent > 0.0 && self.t_max > 0.0) {
            return Err(invalid("x_extent/t_max", "must be > 0").into());
        }
        Ok(())
    }

    pub fn face(&self) -> FaceCondition {
        match (self.q0, self.t0) {
            (_, Some(t)) => FaceCondition::Temperature(t),
            (Some(q), None) => FaceCondition::Flux(q),
            (None, None) => FaceCondition::Flux(DEFAULT_Q0),
        }
    }

    pub fn medium(&self) -> Result<Medium, CliError> {
        let m = Medium {
            solid: Material::new(self.ks, self.cs)?,
            liquid: Material::new(self.kl, self.cl)?,
            density: self.rho,
            latent_heat: self.latent,
            initial_temperature: self.ti,
            melting_temperature: self.tm,
            alpha: self.alpha,
        };
        Ok(m)
    }

    /// Builds and validates the problem (T_i < T_m, T₀ > T_m, ...).
    pub fn problem(&self) -> Result<Problem, CliError> {
        if self.one_phase {
            let liquid = Material::new(self.kl, self.cl)?;
            return Ok(make_one_phase(
                self.face(),
                liquid,
                self.rho,
                self.latent,
                self.tm,
                self.alpha,
            )?);
        }
        let m = self.medium()?;
        Ok(match self.face() {
            FaceCondition::Flux(q) => Problem::Flux(FluxProblem::new(m, q)?),
            FaceCondition::Temperature(t) => Problem::Temperature(TemperatureProblem::new(m, t)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_override_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        std::fs::write(&path, r#"{"alpha": 0.4, "t0": 280.0, "kl": 0.6}"#).unwrap();
        let flags = Flags {
            config: Some(path.clone()),
            alpha: Some(0.5),
            ..Flags::default()
        };
        let c = RunConfig::resolve("solve", &flags).unwrap();
        assert_eq!((c.alpha, c.t0, c.q0, c.kl, c.ks), (0.5, Some(280.0), None, 0.6, 2.22));
        let flags = Flags {
            config: Some(path),
            q0: Some(1e5),
            ..Flags::default()
        };
        let c = RunConfig::resolve("solve", &flags).unwrap();
        assert_eq!((c.q0, c.t0), (Some(1e5), None));
    }

    #[test]
    fn defaults_and_rejections() {
        let c = RunConfig::resolve("solve", &Flags::default()).unwrap();
        assert_eq!(c.q0, Some(DEFAULT_Q0));
        let bad = Flags {
            classical: true,
            ..Flags::default()
        };
        assert!(RunConfig::resolve("solve", &bad).is_err());
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        std::fs::write(&path, r#"{"alpah": 0.4}"#).unwrap();
        let flags = Flags {
            config: Some(path),
            ..Flags::default()
        };
        assert!(matches!(RunConfig::resolve("solve", &flags), Err(CliError::Config(_))));
    }
}
