use absperm::cone::{
    awgnc_pseudoweight, in_fundamental_cone, is_codeword_multiple, is_minimal_pcw, is_unscaled_pcw, Constraint,
};
use absperm::{BinaryMatrix, IntVector};

use super::compute::format_weight;
use crate::config::{OutputFormat, RunConfig};
use crate::error::{CliError, CliResult};
use crate::formats::read_matrix;

fn join(list: &[Constraint]) -> String {
    list.iter().map(Constraint::to_string).collect::<Vec<_>>().join(" ")
}

fn or_none(s: String) -> String {
    if s.is_empty() {
        "none".into()
    } else {
        s
    }
}

/// Cone verdict for `cfg.vector`, rendered as text or one CSV row.
pub fn check(cfg: &RunConfig, h: &BinaryMatrix) -> CliResult<String> {
    let w: &IntVector = cfg
        .vector
        .as_ref()
        .ok_or_else(|| CliError::Config("--vector is required".into()))?;
    let report = in_fundamental_cone(h, w)?;
    let zero = w.is_zero();
    let unscaled = is_unscaled_pcw(h, w)?;
    // minimality and type only make sense for nonzero cone members
    let (minimal, codeword) = if report.member && !zero {
        (Some(is_minimal_pcw(h, w)?), Some(is_codeword_multiple(h, w)?))
    } else {
        (None, None)
    };
    let weight = if w.is_nonnegative() {
        Some(format_weight(&awgnc_pseudoweight(w)?))
    } else {
        None
    };
    let opt = |b: Option<bool>| b.map(|x| x.to_string()).unwrap_or_default();

    match cfg.format {
        OutputFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("vector: ({w})\n"));
            out.push_str(&format!("member: {}\n", report.member));
            out.push_str(&format!("zero: {zero}\n"));
            out.push_str(&format!("unscaled_pcw: {unscaled}\n"));
            out.push_str(&format!("minimal: {}\n", minimal.map_or("n/a".into(), |b| b.to_string())));
            out.push_str(&format!("codeword_multiple: {}\n", codeword.map_or("n/a".into(), |b| b.to_string())));
            out.push_str(&format!("pseudo_weight: {}\n", weight.as_deref().unwrap_or("n/a")));
            out.push_str(&format!("violated: {}\n", or_none(join(&report.violated))));
            out.push_str(&format!("active: {}\n", or_none(join(&report.active))));
            Ok(out)
        }
        OutputFormat::Csv => Ok(format!(
            "vector,member,is_zero,is_unscaled_pcw,is_minimal,is_codeword_multiple,pseudo_weight,violated,active\n\
             \"{w}\",{},{zero},{unscaled},{},{},{},\"{}\",\"{}\"\n",
            report.member,
            opt(minimal),
            opt(codeword),
            weight.unwrap_or_default(),
            join(&report.violated),
            join(&report.active),
        )),
        other => Err(CliError::Config(format!("check output must be text or csv, not {other:?}"))),
    }
}

pub fn cmd_check(cfg: &RunConfig) -> CliResult<String> {
    let h = read_matrix(cfg.require_input()?)?;
    check(cfg, &h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Command;
    use absperm::codegen::example_h422;

    fn run(v: &str, format: OutputFormat) -> String {
        let mut cfg = RunConfig::new(Command::Check);
        cfg.vector = Some(v.parse().unwrap());
        cfg.format = format;
        check(&cfg, &example_h422()).unwrap()
    }

    #[test]
    fn member_and_minimal() {
        let out = run("2 1 1 0", OutputFormat::Text);
        assert!(out.contains("member: true\n"));
        assert!(out.contains("minimal: true\n"));
        assert!(out.contains("codeword_multiple: false\n"));
    }

    #[test]
    fn violation_names_check_zero() {
        let out = run("3,1,1,0", OutputFormat::Csv);
        let row = out.lines().nth(1).unwrap();
        assert!(row.starts_with("\"3 1 1 0\",false,false,false,,,"), "{row}");
        assert!(row.contains("parity(j=0,i=0)"));
    }

    #[test]
    fn zero_vector_is_flagged() {
        let out = run("0 0 0 0", OutputFormat::Text);
        assert!(out.contains("member: true\nzero: true\n"));
        assert!(out.contains("minimal: n/a\n"));
    }

    #[test]
    fn wrong_length_is_rejected() {
        let mut cfg = RunConfig::new(Command::Check);
        cfg.vector = Some("1 1 1".parse().unwrap());
        let err = check(&cfg, &example_h422()).unwrap_err();
        assert_eq!(err.exit_code(), 1);
    }
}
