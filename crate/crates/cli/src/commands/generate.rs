use std::path::{Path, PathBuf};

use absperm::codegen::{dumbbell, example_h422, random_regular_ldpc, remove_four_cycles, LdpcSpec, SwapOutcome};
use absperm::tanner::four_cycle_count;
use absperm::BinaryMatrix;

use super::Output;
use crate::config::{Command, Generator, OutputFormat, RunConfig};
use crate::error::{CliError, CliResult};
use crate::formats::{read_matrix, write_alist, write_dense};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub matrix: BinaryMatrix,
    /// Set by four-cycle removal.
    pub swaps: Option<SwapOutcome>,
}

/// Builds the requested matrix. `input` is needed only for four-cycle
/// removal.
pub fn generate(generator: &Generator, seed: u64, input: Option<&BinaryMatrix>) -> CliResult<Generated> {
    let matrix = match *generator {
        Generator::H422 => example_h422(),
        Generator::Dumbbell { k } => dumbbell(k)?,
        Generator::Regular { n, dv, dc } => random_regular_ldpc(&LdpcSpec { n, dv, dc, seed })?,
        Generator::Decycle { max_iters } => {
            let h = input.ok_or_else(|| CliError::Config("decycle needs --matrix".into()))?;
            let outcome = remove_four_cycles(h, seed, max_iters);
            return Ok(Generated {
                matrix: outcome.matrix.clone(),
                swaps: Some(outcome),
            });
        }
    };
    Ok(Generated { matrix, swaps: None })
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Writes `PREFIX.alist` and `PREFIX.txt` and returns their paths.
pub fn write_generated(matrix: &BinaryMatrix, prefix: &Path) -> CliResult<[PathBuf; 2]> {
    let alist = with_suffix(prefix, ".alist");
    let dense = with_suffix(prefix, ".txt");
    std::fs::write(&alist, write_alist(matrix)).map_err(|e| CliError::io(&alist, e))?;
    std::fs::write(&dense, write_dense(matrix)).map_err(|e| CliError::io(&dense, e))?;
    Ok([alist, dense])
}

/// Runs the generator. The text is the matrix itself when no `--out` prefix
/// is given, otherwise a summary. Budget exhaustion in four-cycle removal is
/// a deferred failure, so the best matrix found is still written.
pub fn cmd_generate(cfg: &RunConfig) -> CliResult<Output> {
    let Command::Generate(generator) = &cfg.command else {
        return Err(CliError::Config("not a generate command".into()));
    };
    let input = match cfg.input.as_ref() {
        Some(p) => Some(read_matrix(p)?),
        None => None,
    };
    let generated = generate(generator, cfg.seed, input.as_ref())?;
    let h = &generated.matrix;

    let text = match &cfg.output {
        Some(prefix) => {
            let [a, d] = write_generated(h, prefix)?;
            format!(
                "{}x{} matrix, four-cycles: {}\nwrote {} and {}\n",
                h.rows(),
                h.cols(),
                four_cycle_count(h),
                a.display(),
                d.display()
            )
        }
        None => match cfg.format {
            OutputFormat::Alist => write_alist(h),
            OutputFormat::Dense | OutputFormat::Csv => write_dense(h),
            other => return Err(CliError::Config(format!("generate output must be alist or dense, not {other:?}"))),
        },
    };
    let failure = generated.swaps.filter(|s| !s.converged).map(|s| {
        CliError::Budget(format!(
            "four-cycle removal stopped after {} iterations with {} four-cycles left",
            s.iterations, s.four_cycles
        ))
    });
    Ok(Output { text, failure })
}
