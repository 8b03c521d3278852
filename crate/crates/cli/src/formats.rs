//! Matrix file formats.
//!
//! alist layout (indices 1-based, zero entries in the index lists are padding):
//!
//! ```text
//! n m
//! max_col_deg max_row_deg
//! col_deg_1 ... col_deg_n
//! row_deg_1 ... row_deg_m
//! <n lines: row indices of each column>
//! <m lines: column indices of each row>
//! ```
//!
//! Dense layout: one line per row of whitespace-separated `0`/`1` tokens.
//! Blank lines and lines starting with `#` are skipped.

use std::path::Path;

use absperm::BinaryMatrix;

use crate::error::{CliError, CliResult};

/// Non-blank lines with their 1-based line numbers.
struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next_tokens(&mut self, what: &str) -> CliResult<(usize, Vec<&'a str>)> {
        for (k, line) in self.inner.by_ref() {
            self.last = k + 1;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if !tokens.is_empty() {
                return Ok((k + 1, tokens));
            }
        }
        Err(CliError::parse(self.last + 1, format!("unexpected end of file: missing {what}")))
    }

    fn next_numbers(&mut self, what: &str) -> CliResult<(usize, Vec<usize>)> {
        let (line, tokens) = self.next_tokens(what)?;
        let nums = tokens
            .iter()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| CliError::parse(line, format!("{what}: not a nonnegative integer: {t:?}")))
            })
            .collect::<CliResult<Vec<_>>>()?;
        Ok((line, nums))
    }

    fn next_fixed(&mut self, what: &str, count: usize) -> CliResult<(usize, Vec<usize>)> {
        let (line, nums) = self.next_numbers(what)?;
        if nums.len() != count {
            return Err(CliError::parse(line, format!("{what}: expected {count} entries, found {}", nums.len())));
        }
        Ok((line, nums))
    }
}

/// Reads the index list of one column or row, dropping zero padding.
fn index_list(
    lines: &mut Lines<'_>,
    what: &str,
    degree: usize,
    max_degree: usize,
    bound: usize,
) -> CliResult<Vec<usize>> {
    let (line, nums) = lines.next_numbers(what)?;
    let idx: Vec<usize> = nums.into_iter().filter(|&x| x != 0).collect();
    if idx.len() != degree {
        return Err(CliError::parse(
            line,
            format!("{what}: declared degree {degree}, found {} indices", idx.len()),
        ));
    }
    if degree > max_degree {
        return Err(CliError::parse(line, format!("{what}: degree {degree} exceeds the declared maximum {max_degree}")));
    }
    let mut seen = std::collections::BTreeSet::new();
    for &x in &idx {
        if x > bound {
            return Err(CliError::parse(line, format!("{what}: index {x} out of range 1..={bound}")));
        }
        if !seen.insert(x) {
            return Err(CliError::parse(line, format!("{what}: index {x} listed twice")));
        }
    }
    Ok(idx.into_iter().map(|x| x - 1).collect())
}

pub fn parse_alist(text: &str) -> CliResult<BinaryMatrix> {
    let mut lines = Lines::new(text);
    let (l1, dims) = lines.next_fixed("size line \"n m\"", 2)?;
    let (n, m) = (dims[0], dims[1]);
    if n == 0 {
        return Err(CliError::parse(l1, "matrix has no columns"));
    }
    let (_, maxes) = lines.next_fixed("maximum-degree line", 2)?;
    let (max_col, max_row) = (maxes[0], maxes[1]);
    let (_, col_deg) = lines.next_fixed("column-degree line", n)?;
    // with no rows the row-degree line is blank
    let row_deg = if m == 0 { Vec::new() } else { lines.next_fixed("row-degree line", m)?.1 };

    let mut h = BinaryMatrix::zeros(m, n);
    for (i, &d) in col_deg.iter().enumerate() {
        for j in index_list(&mut lines, &format!("column {}", i + 1), d, max_col, m)? {
            h.set(j, i, true);
        }
    }
    for (j, &d) in row_deg.iter().enumerate() {
        let what = format!("row {}", j + 1);
        let cols = index_list(&mut lines, &what, d, max_row, n)?;
        let line = lines.last;
        for &i in &cols {
            if !h.get(j, i) {
                return Err(CliError::parse(
                    line,
                    format!("{what} lists column {} but column {} does not list row {}", i + 1, i + 1, j + 1),
                ));
            }
        }
        // both sections agree on every entry of this row once the counts match
        if cols.len() != h.row_support(j).len() {
            return Err(CliError::parse(
                line,
                format!("{what}: column section places {} ones in this row, row section {}", h.row_support(j).len(), cols.len()),
            ));
        }
    }
    if let Ok((line, _)) = lines.next_tokens("") {
        return Err(CliError::parse(line, "trailing content after the row section"));
    }
    Ok(h)
}

pub fn write_alist(h: &BinaryMatrix) -> String {
    let col_w = h.col_weights();
    let row_w = h.row_weights();
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    // an empty index list is written as a single padding zero
    let indices = |v: Vec<usize>| if v.is_empty() { "0".to_string() } else { join(&v) };
    let mut out = format!("{} {}\n", h.cols(), h.rows());
    out.push_str(&format!(
        "{} {}\n",
        col_w.iter().max().copied().unwrap_or(0),
        row_w.iter().max().copied().unwrap_or(0)
    ));
    out.push_str(&join(&col_w));
    out.push('\n');
    out.push_str(&join(&row_w));
    out.push('\n');
    for i in 0..h.cols() {
        out.push_str(&indices(h.col_support(i).iter().map(|j| j + 1).collect()));
        out.push('\n');
    }
    for j in 0..h.rows() {
        out.push_str(&indices(h.row_support(j).iter().map(|i| i + 1).collect()));
        out.push('\n');
    }
    out
}

pub fn parse_dense(text: &str) -> CliResult<BinaryMatrix> {
    let mut rows: Vec<Vec<u8>> = Vec::new();
    let mut width = None;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(CliError::parse(k + 1, format!("expected 0 or 1, found {other:?}"))),
            })
            .collect::<CliResult<Vec<u8>>>()?;
        match width {
            None => width = Some(row.len()),
            Some(w) if w != row.len() => {
                return Err(CliError::parse(k + 1, format!("ragged row: {} entries, expected {w}", row.len())));
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::parse(1, "empty matrix file"));
    }
    Ok(BinaryMatrix::from_rows(&rows)?)
}

pub fn write_dense(h: &BinaryMatrix) -> String {
    let mut out = String::new();
    for j in 0..h.rows() {
        let row: Vec<&str> = h.row(j).iter().map(|&b| if b == 1 { "1" } else { "0" }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Loads a matrix, choosing alist for `.alist` files and dense otherwise.
pub fn read_matrix(path: &Path) -> CliResult<BinaryMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let parsed = if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("alist")) {
        parse_alist(&text)
    } else {
        parse_dense(&text)
    };
    parsed.map_err(|e| match e {
        CliError::Parse { line, message } => CliError::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const H422_ALIST: &str = "4 2\n2 3\n1 2 2 1\n3 3\n1\n1 2\n1 2\n2\n1 2 3\n2 3 4\n";

    fn h422() -> BinaryMatrix {
        BinaryMatrix::from_rows(&[[1, 1, 1, 0], [0, 1, 1, 1]]).unwrap()
    }

    #[test]
    fn alist_of_h422() {
        assert_eq!(parse_alist(H422_ALIST).unwrap(), h422());
        assert_eq!(write_alist(&h422()), H422_ALIST);
    }

    #[test]
    fn zero_padding_is_ignored() {
        let padded = "4 2\n2 3\n1 2 2 1\n3 3\n1 0\n1 2\n1 2\n2 0\n1 2 3\n2 3 4\n";
        assert_eq!(parse_alist(padded).unwrap(), h422());
    }

    #[test]
    fn empty_columns_are_padded() {
        let h = BinaryMatrix::from_rows(&[[1, 0, 1], [0, 0, 0]]).unwrap();
        let text = write_alist(&h);
        assert_eq!(text, "3 2\n1 2\n1 0 1\n2 0\n1\n0\n1\n1 3\n0\n");
        assert_eq!(parse_alist(&text).unwrap(), h);
    }

    #[test]
    fn alist_errors_carry_line_numbers() {
        let err = parse_alist("4 2\n2 3\n1 2 2 1\n3 3\n1\n1 2\n").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 7, .. }), "{err}");
        assert!(err.to_string().contains("missing column 3"), "{err}");

        // row 1 disagrees with the column section
        let bad = "4 2\n2 3\n1 2 2 1\n3 3\n1\n1 2\n1 2\n2\n1 2 4\n2 3 4\n";
        let err = parse_alist(bad).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 9, .. }), "{err}");

        let bad = "4 2\n2 3\n1 2 2 1\n3 3\n1\n1 3\n1 2\n2\n1 2 3\n2 3 4\n";
        assert!(parse_alist(bad).unwrap_err().to_string().contains("out of range"));

        let bad = "4 2\n2 3\n1 2 2 1\n3 3\n1\n1 2 2\n1 2\n2\n1 2 3\n2 3 4\n";
        assert!(parse_alist(bad).unwrap_err().to_string().contains("declared degree"));

        assert!(parse_alist("").unwrap_err().to_string().contains("size line"));
        assert!(parse_alist(&format!("{H422_ALIST}1\n")).unwrap_err().to_string().contains("trailing"));
    }

    #[test]
    fn dense_parsing() {
        assert_eq!(parse_dense("1 1 1 0\n0 1 1 1").unwrap(), h422());
        assert_eq!(parse_dense("# comment\n\n1 1 1 0\n0 1 1 1\n").unwrap(), h422());
        assert_eq!(write_dense(&h422()), "1 1 1 0\n0 1 1 1\n");
        assert!(matches!(parse_dense(""), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_dense("1 0\n1 0 1\n"), Err(CliError::Parse { line: 2, .. })));
        assert!(parse_dense("1 2\n").unwrap_err().to_string().contains("expected 0 or 1"));
    }
}
