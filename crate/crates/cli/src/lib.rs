//! Command-line driver for absdet/perm pseudo-codeword experiments: matrix
//! I/O, batch computation over column subsets, cone checks, histograms,
//! Gaussian-limit tables and matrix generators.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod formats;

use std::io::Write;

pub use commands::{execute, Output};
pub use config::RunConfig;
pub use error::{exit, CliError, CliResult};

/// Executes `cfg`, writes its output to the configured file or stdout, and
/// returns any deferred failure.
pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let out = execute(cfg)?;
    let generate = matches!(cfg.command, config::Command::Generate(_));
    match (&cfg.output, generate) {
        (Some(path), false) => std::fs::write(path, &out.text).map_err(|e| CliError::io(path, e))?,
        _ => std::io::stdout()
            .write_all(out.text.as_bytes())
            .map_err(|e| CliError::io(std::path::Path::new("<stdout>"), e))?,
    }
    match out.failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}
