//! Subcommand implementations.
//!
//! Each command has a pure core taking an already-loaded matrix and returning
//! its output text, plus a `cmd_*` wrapper that reads the input file named in
//! the config.

mod check;
mod compute;
mod gaussian;
mod generate;
mod histogram;

pub use check::{check, cmd_check};
pub use compute::{cmd_compute, compute, evaluate_subset, SubsetRow};
pub use gaussian::{cmd_gaussian, gaussian, GaussianOutput};
pub use generate::{cmd_generate, generate, write_generated, Generated};
pub use histogram::{cmd_histogram, histogram, histogram_from_compute_csv, render_histogram};

use absperm::pcw::enumerate_subsets;
use absperm::{BinaryMatrix, ColumnSubset};
use rayon::prelude::*;

use crate::config::{Command, RunConfig};
use crate::error::{CliError, CliResult};

/// Text destined for the output file or stdout, plus a failure to report
/// after it has been written.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub failure: Option<CliError>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Self { text, failure: None }
    }
}

/// Runs one configured command.
pub fn execute(cfg: &RunConfig) -> CliResult<Output> {
    match cfg.command {
        Command::Compute => cmd_compute(cfg).map(Output::from),
        Command::Histogram => cmd_histogram(cfg).map(Output::from),
        Command::Check => cmd_check(cfg).map(Output::from),
        Command::Gaussian => {
            let out = cmd_gaussian(cfg)?;
            let failure = (!out.converged).then(|| {
                CliError::Contract(format!("Gaussian limit not reached within tolerance {:e}", cfg.tolerance))
            });
            Ok(Output { text: out.csv, failure })
        }
        Command::Generate(_) => cmd_generate(cfg),
    }
}

/// The subsets a run covers, in output order.
pub(crate) fn subsets_for(cfg: &RunConfig, h: &BinaryMatrix) -> CliResult<Vec<ColumnSubset>> {
    Ok(match cfg.resolve_subsets(h)? {
        Some(list) => list,
        None => enumerate_subsets(h.cols(), h.rows() + 1).collect(),
    })
}

/// Applies `f` to contiguous blocks of `subsets` on a pool of `threads`
/// workers and returns the block results in input order. The first error in
/// input order wins, so failures are reported identically for every thread
/// count.
pub(crate) fn par_blocks<T, F>(subsets: &[ColumnSubset], threads: usize, f: F) -> CliResult<Vec<T>>
where
    T: Send,
    F: Fn(&[ColumnSubset]) -> CliResult<T> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Config(format!("cannot start worker pool: {e}")))?;
    let workers = pool.current_num_threads().max(1);
    let block = subsets.len().div_ceil(workers * 8).max(1);
    let results: Vec<CliResult<T>> = pool.install(|| subsets.par_chunks(block).map(&f).collect());
    results.into_iter().collect()
}
