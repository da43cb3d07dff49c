//! Command-line front end. Every run is a pure function of its resolved
//! configuration; randomness only through `--seed`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 subcritical flux, 3 no root
//! bracket, 4 I/O, 5 failed gate or regression, 6 numerical failure.

pub mod commands;
pub mod config;
pub mod output;

pub use config::{Cli, Command, Flags, Format, RunConfig};

use crate::error::Error;
use clap::Parser;
use std::io::Write;
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("config: {0}")]
    Config(String),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_SUBCRITICAL: i32 = 2;
pub const EXIT_NO_BRACKET: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_GATE: i32 = 5;
pub const EXIT_NUMERICAL: i32 = 6;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => EXIT_IO,
            CliError::Config(_) => EXIT_INVALID,
            CliError::Lib(e) => match e {
                Error::SubcriticalFlux { .. } => EXIT_SUBCRITICAL,
                Error::NoBracket { .. } => EXIT_NO_BRACKET,
                Error::InvalidParameter { .. }
                | Error::Domain { .. }
                | Error::Grid(_)
                | Error::Unsupported(_)
                | Error::SupercriticalFlux { .. } => EXIT_INVALID,
                Error::GammaPole(_)
                | Error::NonConvergence { .. }
                | Error::PrecisionLoss { .. }
                | Error::QuadratureFailure { .. }
                | Error::Underflow { .. }
                | Error::Singularity { .. } => EXIT_NUMERICAL,
            },
        }
    }
}

fn dispatch(cmd: &Command) -> Result<commands::Outcome, CliError> {
    let cfg = RunConfig::resolve(cmd.name(), cmd.flags())?;
    if cmd.flags().print_config {
        return Ok(commands::Outcome {
            stdout: output::json(&cfg),
            gate_failure: None,
        });
    }
    match cmd {
        Command::Solve(_) => commands::cmd_solve(&cfg),
        Command::Profile(_) => commands::cmd_profile(&cfg),
        Command::Verify(_) => commands::cmd_verify(&cfg),
        Command::Scan(_) => commands::cmd_scan(&cfg),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            match o.gate_failure {
                Some(g) => {
                    let _ = writeln!(err, "error: gate failed: {g}");
                    EXIT_GATE
                }
                None => EXIT_OK,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
