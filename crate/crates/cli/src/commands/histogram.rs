use absperm::cone::{awgnc_pseudoweight, WeightHistogram};
use absperm::{BinaryMatrix, IntVector, PcwKind};

use super::{evaluate_subset, par_blocks, subsets_for};
use crate::config::{OutputFormat, RunConfig};
use crate::error::{CliError, CliResult};
use crate::formats::read_matrix;

/// Cumulative pseudo-weight histogram over the configured subsets (default
/// kind `absdet`). Blocks are tallied in parallel and merged in order.
pub fn histogram(cfg: &RunConfig, h: &BinaryMatrix) -> CliResult<WeightHistogram> {
    let kind = cfg.kind.unwrap_or(PcwKind::Absdet);
    let edges = cfg.edges_for(h.cols())?;
    let subsets = subsets_for(cfg, h)?;
    let parts = par_blocks(&subsets, cfg.threads, |block| {
        let mut part = WeightHistogram::empty(&edges)?;
        for s in block {
            part.add(&evaluate_subset(h, kind, s, false)?.weight);
        }
        Ok(part)
    })?;
    let mut total = WeightHistogram::empty(&edges)?;
    for part in &parts {
        total.merge(part)?;
    }
    Ok(total)
}

/// Histogram of the `vector` column of a compute CSV. Signed vectors are
/// taken in absolute value; deduplicated rows count `count` times.
pub fn histogram_from_compute_csv(text: &str, edges: &[f64]) -> CliResult<WeightHistogram> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::parse(1, format!("bad CSV header: {e}")))?
        .clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let vector_col = col("vector").ok_or_else(|| CliError::parse(1, "CSV has no `vector` column"))?;
    let count_col = col("count");
    let mut hist = WeightHistogram::empty(edges)?;
    for (k, record) in reader.records().enumerate() {
        let line = k + 2;
        let record = record.map_err(|e| CliError::parse(line, e.to_string()))?;
        let field = record.get(vector_col).unwrap_or("");
        let v: IntVector = field.parse().map_err(|e| CliError::parse(line, format!("{e}")))?;
        let w = awgnc_pseudoweight(&v.abs())?;
        let times = match count_col {
            Some(c) => record
                .get(c)
                .and_then(|t| t.parse::<u64>().ok())
                .ok_or_else(|| CliError::parse(line, "bad count"))?,
            None => 1,
        };
        for _ in 0..times {
            hist.add(&w);
        }
    }
    Ok(hist)
}

pub fn render_histogram(hist: &WeightHistogram, format: OutputFormat) -> CliResult<String> {
    match format {
        OutputFormat::Csv => Ok(hist.to_csv()),
        OutputFormat::Gnuplot => Ok(hist.to_gnuplot()),
        other => Err(CliError::Config(format!("histogram output must be csv or gnuplot, not {other:?}"))),
    }
}

/// Reads a matrix, or a compute CSV when the input ends in `.csv`.
pub fn cmd_histogram(cfg: &RunConfig) -> CliResult<String> {
    let path = cfg.require_input()?;
    let hist = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        if cfg.edges.is_empty() {
            return Err(CliError::Config("--edges is required when reading a compute CSV".into()));
        }
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        histogram_from_compute_csv(&text, &cfg.edges)?
    } else {
        histogram(cfg, &read_matrix(path)?)?
    };
    render_histogram(&hist, cfg.format)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commands::compute;
    use crate::config::Command;
    use absperm::codegen::example_h422;

    #[test]
    fn h422_histogram() {
        let mut cfg = RunConfig::new(Command::Histogram);
        cfg.edges = vec![1.0, 2.0, 3.0];
        let hist = histogram(&cfg, &example_h422()).unwrap();
        assert_eq!(hist.counts, vec![0, 2, 4]);
        assert_eq!((hist.zero_count, hist.total), (0, 4));
    }

    #[test]
    fn csv_round_trip_matches_direct_histogram() {
        let h = example_h422();
        let mut cfg = RunConfig::new(Command::Compute);
        cfg.kind = Some(PcwKind::Perm);
        cfg.edges = vec![2.0, 2.5, 3.0];
        let direct = histogram(&cfg, &h).unwrap();
        let text = compute(&cfg, &h).unwrap();
        assert_eq!(histogram_from_compute_csv(&text, &cfg.edges).unwrap(), direct);
        cfg.dedupe = true;
        let text = compute(&cfg, &h).unwrap();
        assert_eq!(histogram_from_compute_csv(&text, &cfg.edges).unwrap(), direct);
    }

    #[test]
    fn empty_csv_gives_zero_histogram() {
        let hist = histogram_from_compute_csv("subset,vector\n", &[1.0]).unwrap();
        assert_eq!((hist.counts.clone(), hist.zero_count, hist.total), (vec![0], 0, 0));
        assert!(histogram_from_compute_csv("subset\n\"0\"\n", &[1.0]).is_err());
    }
}
