use std::path::PathBuf;

use absperm::gaussian::{DEFAULT_SCHEDULE, DEFAULT_TOLERANCE};
use absperm::{BinaryMatrix, ColumnSubset, IntVector, PcwKind};

use crate::error::{CliError, CliResult};

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Compute,
    Histogram,
    Check,
    Gaussian,
    Generate(Generator),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    H422,
    Dumbbell { k: usize },
    Regular { n: usize, dv: usize, dc: usize },
    /// Four-cycle removal on the input matrix.
    Decycle { max_iters: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubsetSelector {
    All,
    /// 0-based column indices, one list per subset.
    Explicit(Vec<Vec<usize>>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Text,
    Gnuplot,
    Alist,
    Dense,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<PathBuf>,
    /// Output file, or a file prefix for `generate`. Stdout when absent.
    pub output: Option<PathBuf>,
    pub kind: Option<PcwKind>,
    /// `None` selects the command's default (all subsets, except for
    /// `gaussian`).
    pub subsets: Option<SubsetSelector>,
    pub dedupe: bool,
    /// Adds the `is_minimal` column to compute output.
    pub minimal: bool,
    /// Histogram thresholds; empty selects `0, 0.25, ..., n`.
    pub edges: Vec<f64>,
    pub eps: Vec<f64>,
    pub tolerance: f64,
    /// Vector for `check`.
    pub vector: Option<IntVector>,
    pub seed: u64,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
    pub format: OutputFormat,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            input: None,
            output: None,
            kind: None,
            subsets: None,
            dedupe: false,
            minimal: false,
            edges: Vec::new(),
            eps: DEFAULT_SCHEDULE.to_vec(),
            tolerance: DEFAULT_TOLERANCE,
            vector: None,
            seed: 0,
            threads: 0,
            format: OutputFormat::Csv,
        }
    }

    /// `kind`, which compute commands must set.
    pub fn require_kind(&self) -> CliResult<PcwKind> {
        self.kind
            .ok_or_else(|| CliError::Config("--kind is required (det, absdet or perm)".into()))
    }

    pub fn require_input(&self) -> CliResult<&PathBuf> {
        self.input
            .as_ref()
            .ok_or_else(|| CliError::Config("--matrix is required".into()))
    }

    /// Explicit subsets validated against the matrix, or `None` for all.
    pub fn resolve_subsets(&self, h: &BinaryMatrix) -> CliResult<Option<Vec<ColumnSubset>>> {
        let (m, n) = (h.rows(), h.cols());
        if m >= n {
            return Err(CliError::Config(format!("need m < n, got a {m}x{n} matrix")));
        }
        match &self.subsets {
            None | Some(SubsetSelector::All) => Ok(None),
            Some(SubsetSelector::Explicit(lists)) => lists
                .iter()
                .map(|list| {
                    if list.len() != m + 1 {
                        return Err(CliError::Config(format!(
                            "subset {list:?} has {} columns, expected m+1 = {}",
                            list.len(),
                            m + 1
                        )));
                    }
                    ColumnSubset::new(list.clone(), n).map_err(|e| CliError::Config(format!("subset {list:?}: {e}")))
                })
                .collect::<CliResult<Vec<_>>>()
                .map(Some),
        }
    }

    pub fn edges_for(&self, n: usize) -> CliResult<Vec<f64>> {
        if self.edges.is_empty() {
            Ok(absperm::cone::uniform_edges(0.0, n as f64, 0.25)?)
        } else {
            Ok(self.edges.clone())
        }
    }
}

/// Parses `0,1,2` or `0 1 2`.
pub fn parse_index_list(s: &str) -> CliResult<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| CliError::Config(format!("not a column index: {t:?}")))
        })
        .collect()
}

/// Parses a comma-separated float list, or `start:stop:step`.
pub fn parse_float_list(s: &str) -> CliResult<Vec<f64>> {
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| CliError::Config(format!("not a number: {t:?}")))
    };
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let (a, b, c) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
        return Ok(absperm::cone::uniform_edges(a, b, c)?);
    }
    let values = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(num)
        .collect::<CliResult<Vec<_>>>()?;
    if values.is_empty() {
        return Err(CliError::Config(format!("empty number list {s:?}")));
    }
    Ok(values)
}
