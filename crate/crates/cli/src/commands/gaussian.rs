use absperm::gaussian::{validate_schedule, verify_gaussian_limit};
use absperm::{BinaryMatrix, ColumnSubset};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::formats::read_matrix;

use super::subsets_for;

#[derive(Clone, Debug, PartialEq)]
pub struct GaussianOutput {
    pub csv: String,
    /// Whether every bit met the tolerance at the smallest `eps`.
    pub converged: bool,
}

/// Convergence table `i,epsilon,product,target,relative_error` for one
/// subset; with several subsets a leading `subset` column is added. Without
/// an explicit subset the matrix must have `n = m + 1`.
pub fn gaussian(cfg: &RunConfig, h: &BinaryMatrix) -> CliResult<GaussianOutput> {
    validate_schedule(&cfg.eps).map_err(|e| CliError::Config(e.to_string()))?;
    if cfg.tolerance.is_nan() || cfg.tolerance <= 0.0 {
        return Err(CliError::Config(format!("tolerance must be positive, got {}", cfg.tolerance)));
    }
    let subsets = match &cfg.subsets {
        Some(_) => subsets_for(cfg, h)?,
        None => {
            if h.cols() != h.rows() + 1 {
                return Err(CliError::Config(format!(
                    "give --subset (m+1 = {} of {} columns) or --all-subsets",
                    h.rows() + 1,
                    h.cols()
                )));
            }
            vec![ColumnSubset::full(h.cols())]
        }
    };
    let mut csv = String::new();
    let mut converged = true;
    let prefixed = subsets.len() > 1;
    for (k, s) in subsets.iter().enumerate() {
        let report = verify_gaussian_limit(h, s, &cfg.eps, cfg.tolerance)?;
        converged &= report.all_converged();
        let body = report.to_csv();
        let mut lines = body.lines();
        let header = lines.next().unwrap_or_default();
        if !prefixed {
            csv.push_str(&body);
            continue;
        }
        if k == 0 {
            csv.push_str(&format!("subset,{header}\n"));
        }
        for line in lines {
            csv.push_str(&format!("\"{s}\",{line}\n"));
        }
    }
    Ok(GaussianOutput { csv, converged })
}

pub fn cmd_gaussian(cfg: &RunConfig) -> CliResult<GaussianOutput> {
    let h = read_matrix(cfg.require_input()?)?;
    gaussian(cfg, &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Command, SubsetSelector};
    use absperm::codegen::{dumbbell, example_h422};

    #[test]
    fn dumbbell_defaults_to_full_subset() {
        let out = gaussian(&RunConfig::new(Command::Gaussian), &dumbbell(3).unwrap()).unwrap();
        assert!(out.converged);
        assert!(out.csv.starts_with("i,epsilon,product,target,relative_error\n"));
        assert_eq!(out.csv.lines().count(), 1 + 7 * 4);
    }

    #[test]
    fn all_subsets_get_a_subset_column() {
        let mut cfg = RunConfig::new(Command::Gaussian);
        cfg.subsets = Some(SubsetSelector::All);
        let out = gaussian(&cfg, &example_h422()).unwrap();
        assert!(out.converged);
        assert!(out.csv.starts_with("subset,i,epsilon"));
        assert_eq!(out.csv.lines().count(), 1 + 4 * 4 * 4);
    }

    #[test]
    fn bad_schedules_are_config_errors() {
        let h = dumbbell(3).unwrap();
        let mut cfg = RunConfig::new(Command::Gaussian);
        cfg.eps = vec![1e-2, 1e-1];
        assert!(matches!(gaussian(&cfg, &h), Err(CliError::Config(_))));
        cfg.eps = vec![];
        assert!(matches!(gaussian(&cfg, &h), Err(CliError::Config(_))));
        cfg.eps = vec![0.1];
        assert!(matches!(gaussian(&RunConfig::new(Command::Gaussian), &example_h422()), Err(CliError::Config(_))));
    }

    #[test]
    fn loose_schedule_fails_to_converge() {
        let mut cfg = RunConfig::new(Command::Gaussian);
        cfg.eps = vec![0.5];
        let out = gaussian(&cfg, &dumbbell(3).unwrap()).unwrap();
        assert!(!out.converged);
    }
}
