//! Command-line argument definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::config::{parse_float_list, parse_index_list, Command, Generator, OutputFormat, RunConfig, SubsetSelector};
use crate::error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "absperm", version, about = "Absdet/perm pseudo-codewords of binary parity-check matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// One CSV row per column subset (or per distinct vector with --dedupe)
    Compute(ComputeArgs),
    /// Cumulative AWGNC pseudo-weight histogram
    Histogram(HistogramArgs),
    /// Fundamental-cone verdict for one vector
    Check(CheckArgs),
    /// Gaussian-model convergence table
    Gaussian(GaussianArgs),
    /// Write a parity-check matrix
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KindArg {
    Det,
    Absdet,
    Perm,
}

impl From<KindArg> for absperm::PcwKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Det => Self::Det,
            KindArg::Absdet => Self::Absdet,
            KindArg::Perm => Self::Perm,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Csv,
    Text,
    Gnuplot,
    Alist,
    Dense,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Self::Csv,
            FormatArg::Text => Self::Text,
            FormatArg::Gnuplot => Self::Gnuplot,
            FormatArg::Alist => Self::Alist,
            FormatArg::Dense => Self::Dense,
        }
    }
}

#[derive(Debug, Args)]
pub struct MatrixArg {
    /// Parity-check matrix (.alist, otherwise dense 0/1 text)
    #[arg(long, short = 'm')]
    pub matrix: PathBuf,
}

#[derive(Debug, Args)]
pub struct SubsetArgs {
    /// 0-based column subset such as 0,1,2; repeatable
    #[arg(long = "subset", value_name = "COLS", conflicts_with = "all_subsets")]
    pub subset: Vec<String>,
    /// Every subset of size m+1, in lexicographic order
    #[arg(long)]
    pub all_subsets: bool,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Worker threads (0 = one per core)
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
    /// Output file (stdout when omitted)
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub matrix: MatrixArg,
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[command(flatten)]
    pub subsets: SubsetArgs,
    /// One row per distinct vector with a count column
    #[arg(long)]
    pub dedupe: bool,
    /// Add an is_minimal column
    #[arg(long)]
    pub minimal: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct HistogramArgs {
    /// Matrix, or a CSV written by `compute`
    #[arg(long, short = 'm')]
    pub matrix: PathBuf,
    #[arg(long, value_enum, default_value = "absdet")]
    pub kind: KindArg,
    #[command(flatten)]
    pub subsets: SubsetArgs,
    /// Thresholds as a,b,c or start:stop:step (default 0:n:0.25)
    #[arg(long)]
    pub edges: Option<String>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub matrix: MatrixArg,
    /// Vector such as "2 1 1 0" or 2,1,1,0
    #[arg(long, allow_hyphen_values = true)]
    pub vector: String,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
    /// Output file (stdout when omitted)
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GaussianArgs {
    #[command(flatten)]
    pub matrix: MatrixArg,
    #[command(flatten)]
    pub subsets: SubsetArgs,
    /// Strictly decreasing eps schedule (default 1e-1,1e-2,1e-3,1e-4)
    #[arg(long)]
    pub eps: Option<String>,
    /// Tolerance on |product - target| / max(target, 1) at the last eps
    #[arg(long)]
    pub tol: Option<f64>,
    /// Output file (stdout when omitted)
    #[arg(long, short = 'o')]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(subcommand)]
    pub which: GenerateWhich,
    /// Write PREFIX.alist and PREFIX.txt instead of printing
    #[arg(long, short = 'o', global = true, value_name = "PREFIX")]
    pub out: Option<PathBuf>,
    /// Stdout format when --out is absent
    #[arg(long, value_enum, default_value = "dense", global = true)]
    pub format: FormatArg,
}

#[derive(Debug, Subcommand)]
pub enum GenerateWhich {
    /// The 2x4 matrix of the [4,2,2] code
    H422,
    /// Two k-cycles joined by a bridge bit
    Dumbbell {
        /// Cycle length
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Random (dv, dc)-regular matrix with n columns
    Regular {
        /// Number of columns (bits)
        #[arg(long)]
        n: usize,
        /// Column weight
        #[arg(long)]
        dv: usize,
        /// Row weight
        #[arg(long)]
        dc: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Remove four-cycles from a matrix by degree-preserving edge swaps
    Decycle {
        #[command(flatten)]
        matrix: MatrixArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Swap attempts before giving up (exit code 3)
        #[arg(long, default_value_t = 200_000)]
        max_iters: usize,
    },
}

fn subsets(args: &SubsetArgs) -> CliResult<Option<SubsetSelector>> {
    if args.all_subsets {
        return Ok(Some(SubsetSelector::All));
    }
    if args.subset.is_empty() {
        return Ok(None);
    }
    let lists = args.subset.iter().map(|s| parse_index_list(s)).collect::<CliResult<_>>()?;
    Ok(Some(SubsetSelector::Explicit(lists)))
}

impl Cli {
    pub fn into_config(self) -> CliResult<RunConfig> {
        Ok(match self.command {
            Sub::Compute(a) => {
                let mut c = RunConfig::new(Command::Compute);
                c.input = Some(a.matrix.matrix);
                c.kind = Some(a.kind.into());
                c.subsets = subsets(&a.subsets)?;
                c.dedupe = a.dedupe;
                c.minimal = a.minimal;
                c.threads = a.common.threads;
                c.output = a.common.out;
                c
            }
            Sub::Histogram(a) => {
                let mut c = RunConfig::new(Command::Histogram);
                c.input = Some(a.matrix);
                c.kind = Some(a.kind.into());
                c.subsets = subsets(&a.subsets)?;
                if let Some(e) = &a.edges {
                    c.edges = parse_float_list(e)?;
                }
                c.format = a.format.into();
                c.threads = a.common.threads;
                c.output = a.common.out;
                c
            }
            Sub::Check(a) => {
                let mut c = RunConfig::new(Command::Check);
                c.input = Some(a.matrix.matrix);
                c.vector = Some(a.vector.parse().map_err(|e: absperm::Error| CliError::Config(e.to_string()))?);
                c.format = a.format.into();
                c.output = a.out;
                c
            }
            Sub::Gaussian(a) => {
                let mut c = RunConfig::new(Command::Gaussian);
                c.input = Some(a.matrix.matrix);
                c.subsets = subsets(&a.subsets)?;
                if let Some(e) = &a.eps {
                    c.eps = parse_float_list(e)?;
                }
                if let Some(t) = a.tol {
                    c.tolerance = t;
                }
                c.output = a.out;
                c
            }
            Sub::Generate(a) => {
                let (generator, input, seed) = match a.which {
                    GenerateWhich::H422 => (Generator::H422, None, 0),
                    GenerateWhich::Dumbbell { k } => (Generator::Dumbbell { k }, None, 0),
                    GenerateWhich::Regular { n, dv, dc, seed } => (Generator::Regular { n, dv, dc }, None, seed),
                    GenerateWhich::Decycle { matrix, seed, max_iters } => {
                        (Generator::Decycle { max_iters }, Some(matrix.matrix), seed)
                    }
                };
                let mut c = RunConfig::new(Command::Generate(generator));
                c.input = input;
                c.seed = seed;
                c.format = a.format.into();
                c.output = a.out;
                c
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use absperm::PcwKind;

    fn parse(args: &[&str]) -> RunConfig {
        Cli::try_parse_from(args).unwrap().into_config().unwrap()
    }

    #[test]
    fn compute_flags() {
        let c = parse(&["absperm", "compute", "--matrix", "h.txt", "--kind", "perm", "--subset", "0,1,2", "--subset", "1 2 3", "--dedupe", "--threads", "4"]);
        assert_eq!(c.kind, Some(PcwKind::Perm));
        assert_eq!(c.subsets, Some(SubsetSelector::Explicit(vec![vec![0, 1, 2], vec![1, 2, 3]])));
        assert!(c.dedupe);
        assert_eq!(c.threads, 4);
        assert!(Cli::try_parse_from(["absperm", "compute", "--matrix", "h.txt"]).is_err());
        assert!(Cli::try_parse_from(["absperm", "compute", "-m", "h", "--kind", "det", "--subset", "0", "--all-subsets"]).is_err());
    }

    #[test]
    fn histogram_and_gaussian_lists() {
        let c = parse(&["absperm", "histogram", "-m", "h.txt", "--edges", "0:2:1", "--format", "gnuplot"]);
        assert_eq!(c.edges, vec![0.0, 1.0, 2.0]);
        assert_eq!(c.kind, Some(PcwKind::Absdet));
        assert_eq!(c.format, OutputFormat::Gnuplot);
        let c = parse(&["absperm", "gaussian", "-m", "h.txt", "--eps", "0.1,0.01"]);
        assert_eq!(c.eps, vec![0.1, 0.01]);
        let bad = Cli::try_parse_from(["absperm", "gaussian", "-m", "h", "--eps", "x"]).unwrap().into_config();
        assert!(matches!(bad, Err(CliError::Config(_))));
    }

    #[test]
    fn generate_flags() {
        let c = parse(&["absperm", "generate", "regular", "--n", "20", "--dv", "3", "--dc", "4", "--seed", "9", "--out", "x"]);
        assert_eq!(c.command, Command::Generate(Generator::Regular { n: 20, dv: 3, dc: 4 }));
        assert_eq!(c.seed, 9);
        assert_eq!(c.output, Some(PathBuf::from("x")));
        let c = parse(&["absperm", "check", "-m", "h", "--vector", "-1,2"]);
        assert_eq!(c.vector.unwrap().to_string(), "-1 2");
    }
}
