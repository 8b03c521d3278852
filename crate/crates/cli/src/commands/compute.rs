use std::collections::HashMap;

use absperm::cone::{awgnc_pseudoweight, is_minimal_pcw, is_unscaled_pcw, PseudoWeight};
use absperm::pcw::{is_codeword, mod2_reduce, z_syndrome};
use absperm::{BinaryMatrix, ColumnSubset, IntVector, PcwKind};

use super::{par_blocks, subsets_for};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::formats::read_matrix;

/// One evaluated subset. For `det` the cone columns refer to `|nu|`.
#[derive(Clone, Debug, PartialEq)]
pub struct SubsetRow {
    pub subset: ColumnSubset,
    pub vector: IntVector,
    pub is_unscaled_pcw: bool,
    pub weight: PseudoWeight,
    pub is_minimal: Option<bool>,
}

fn contract(kind: PcwKind, s: &ColumnSubset, what: &str) -> CliError {
    CliError::Contract(format!("{kind} vector for subset ({s}) {what}"))
}

/// Builds the vector for `s` and re-checks it before it may be emitted.
pub fn evaluate_subset(h: &BinaryMatrix, kind: PcwKind, s: &ColumnSubset, minimal: bool) -> CliResult<SubsetRow> {
    let vector = kind.compute(h, s).map_err(|e| contract(kind, s, &format!("failed: {e}")))?;
    let omega = match kind {
        PcwKind::Det => {
            if !z_syndrome(h, &vector)?.is_zero() {
                return Err(contract(kind, s, &format!("({vector}) has a nonzero integer syndrome")));
            }
            if !is_codeword(h, &mod2_reduce(&vector))? {
                return Err(contract(kind, s, &format!("({vector}) does not reduce to a codeword")));
            }
            vector.abs()
        }
        PcwKind::Absdet | PcwKind::Perm => vector.clone(),
    };
    if !is_unscaled_pcw(h, &omega)? {
        return Err(contract(kind, s, &format!("({omega}) is not an unscaled pseudo-codeword")));
    }
    let weight = awgnc_pseudoweight(&omega)?;
    let is_minimal = if !minimal {
        None
    } else if omega.is_zero() {
        Some(false)
    } else {
        Some(is_minimal_pcw(h, &omega)?)
    };
    Ok(SubsetRow {
        subset: s.clone(),
        vector,
        is_unscaled_pcw: true,
        weight,
        is_minimal,
    })
}

pub(crate) fn format_weight(w: &PseudoWeight) -> String {
    if w.is_zero_vector() {
        "0".into()
    } else {
        format!("{:.12}", w.value())
    }
}

fn tail(row: &SubsetRow) -> String {
    let mut out = format!(
        "{},{},{}",
        row.is_unscaled_pcw,
        format_weight(&row.weight),
        row.weight.is_zero_vector()
    );
    if let Some(m) = row.is_minimal {
        out.push_str(&format!(",{m}"));
    }
    out
}

/// CSV of one row per subset in lexicographic (or given) order, or one row
/// per distinct vector with `dedupe`.
pub fn compute(cfg: &RunConfig, h: &BinaryMatrix) -> CliResult<String> {
    let kind = cfg.require_kind()?;
    let subsets = subsets_for(cfg, h)?;
    let blocks = par_blocks(&subsets, cfg.threads, |block| {
        block
            .iter()
            .map(|s| evaluate_subset(h, kind, s, cfg.minimal))
            .collect::<CliResult<Vec<_>>>()
    })?;
    let rows: Vec<SubsetRow> = blocks.into_iter().flatten().collect();

    let minimal_col = if cfg.minimal { ",is_minimal" } else { "" };
    let mut out = String::new();
    if cfg.dedupe {
        out.push_str(&format!("vector,count,is_unscaled_pcw,pseudo_weight,is_zero{minimal_col}\n"));
        let mut order: Vec<(&SubsetRow, usize)> = Vec::new();
        let mut index: HashMap<&IntVector, usize> = HashMap::new();
        for row in &rows {
            match index.get(&row.vector) {
                Some(&k) => order[k].1 += 1,
                None => {
                    index.insert(&row.vector, order.len());
                    order.push((row, 1));
                }
            }
        }
        for (row, count) in order {
            out.push_str(&format!("\"{}\",{count},{}\n", row.vector, tail(row)));
        }
    } else {
        out.push_str(&format!("subset,vector,is_unscaled_pcw,pseudo_weight,is_zero{minimal_col}\n"));
        for row in &rows {
            out.push_str(&format!("\"{}\",\"{}\",{}\n", row.subset, row.vector, tail(row)));
        }
    }
    Ok(out)
}

pub fn cmd_compute(cfg: &RunConfig) -> CliResult<String> {
    let h = read_matrix(cfg.require_input()?)?;
    compute(cfg, &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Command, SubsetSelector};
    use absperm::codegen::{dumbbell, example_h422};

    fn cfg(kind: PcwKind) -> RunConfig {
        let mut c = RunConfig::new(Command::Compute);
        c.kind = Some(kind);
        c
    }

    #[test]
    fn h422_absdet_rows() {
        let out = compute(&cfg(PcwKind::Absdet), &example_h422()).unwrap();
        assert_eq!(
            out,
            "subset,vector,is_unscaled_pcw,pseudo_weight,is_zero\n\
             \"0 1 2\",\"0 1 1 0\",true,2.000000000000,false\n\
             \"0 1 3\",\"1 1 0 1\",true,3.000000000000,false\n\
             \"0 2 3\",\"1 0 1 1\",true,3.000000000000,false\n\
             \"1 2 3\",\"0 1 1 0\",true,2.000000000000,false\n"
        );
    }

    #[test]
    fn dedupe_counts_duplicates() {
        let mut c = cfg(PcwKind::Absdet);
        c.dedupe = true;
        let out = compute(&c, &example_h422()).unwrap();
        assert_eq!(out.lines().nth(1).unwrap(), "\"0 1 1 0\",2,true,2.000000000000,false");
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn perm_rows_with_minimality() {
        let mut c = cfg(PcwKind::Perm);
        c.minimal = true;
        let out = compute(&c, &example_h422()).unwrap();
        assert!(out.starts_with("subset,vector,is_unscaled_pcw,pseudo_weight,is_zero,is_minimal\n"));
        assert!(out.contains("\"0 1 2\",\"2 1 1 0\",true,2.666666666667,false,true"));
        assert!(out.contains("\"1 2 3\",\"0 1 1 2\",true,2.666666666667,false,true"));
    }

    #[test]
    fn dumbbell_absdet_is_zero() {
        let out = compute(&cfg(PcwKind::Absdet), &dumbbell(4).unwrap()).unwrap();
        assert_eq!(out.lines().nth(1).unwrap(), "\"0 1 2 3 4 5 6 7 8\",\"0 0 0 0 0 0 0 0 0\",true,0,true");
    }

    #[test]
    fn det_vectors_are_signed() {
        let out = compute(&cfg(PcwKind::Det), &dumbbell(3).unwrap()).unwrap();
        assert!(out.contains("\"2 -2 2 -4 2 2 -2\",true,6.400000000000,false"), "{out}");
    }

    #[test]
    fn explicit_subsets_and_missing_kind() {
        let mut c = cfg(PcwKind::Absdet);
        c.subsets = Some(SubsetSelector::Explicit(vec![vec![3, 2, 1]]));
        let out = compute(&c, &example_h422()).unwrap();
        assert_eq!(out.lines().count(), 2);
        c.kind = None;
        assert!(matches!(compute(&c, &example_h422()), Err(CliError::Config(_))));
    }
}
