//! Command-line front end for `nc-freecalc-core`.
//!
//! [`run`] parses an argument vector, executes one command and returns the
//! rendered output with its exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | argument, parse or domain error |
//! | 2 | an enumeration cap was exceeded |
//! | 3 | a verification check failed |

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;
use nc_freecalc_core::limits;

pub mod args;
mod commands;
pub mod registry;
mod render;
mod verify;

pub const CAP_OVERRIDE_VAR: &str = "NC_FREECALC_CAP_OVERRIDE";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] nc_freecalc_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("failed to write csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(nc_freecalc_core::Error::CapExceeded { .. }) => 2,
            _ => 1,
        }
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn failure(err: &CliError) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {err}\n"), code: err.exit_code() }
    }
}

/// Runs one command, reading the cap override from the environment.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_cap(argv, std::env::var(CAP_OVERRIDE_VAR).ok().as_deref())
}

/// Runs one command with an explicit cap override string.
pub fn run_with_cap<I, T>(argv: I, cap_override: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { stdout: text, stderr: String::new(), code: 0 }
                }
                _ => Outcome { stdout: String::new(), stderr: text, code: 1 },
            };
        }
    };
    let cap = match cap_override.map(str::trim).filter(|s| !s.is_empty()) {
        None => None,
        Some(s) => match s.parse::<usize>() {
            Ok(c) => Some(c),
            Err(_) => return Outcome::failure(&usage(format!("{CAP_OVERRIDE_VAR} must be a non-negative integer, got {s:?}"))),
        },
    };
    limits::set_cap_override(cap);
    let result = commands::dispatch(&cli.command).and_then(|(report, passed)| {
        let text = report.render(cli.format)?;
        Ok((text, passed))
    });
    limits::set_cap_override(None);
    match result {
        Ok((stdout, true)) => Outcome { stdout, stderr: String::new(), code: 0 },
        Ok((stdout, false)) => Outcome { stdout, stderr: "error: verification failed\n".into(), code: 3 },
        Err(e) => Outcome::failure(&e),
    }
}
