//! Fundamental-cone geometry.
//!
//! The fundamental cone `K(H)` is cut out by `w_i >= 0` for every bit and
//! `w_i <= sum_{i' in I_j \ i} w_{i'}` for every check `j` and bit `i` in
//! `I_j`. Every check here is exact; floats only appear when pseudo-weights
//! are exported.

use std::fmt;
use std::ops::AddAssign;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{rank_rational, BinaryMatrix, IntMatrix};
use crate::pcw::{is_codeword, mod2_reduce};
use crate::{Error, Result};

/// One inequality of the cone description.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constraint {
    /// `w_bit >= 0`
    NonNegative { bit: usize },
    /// `w_bit <= sum of the other entries on check`
    Parity { check: usize, bit: usize },
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::NonNegative { bit } => write!(f, "nonneg(i={bit})"),
            Constraint::Parity { check, bit } => write!(f, "parity(j={check},i={bit})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeReport {
    pub member: bool,
    pub violated: Vec<Constraint>,
    /// Constraints holding with equality.
    pub active: Vec<Constraint>,
}

impl ConeReport {
    /// The `(check, bit)` pairs of violated parity inequalities.
    pub fn violated_parity(&self) -> Vec<(usize, usize)> {
        self.violated
            .iter()
            .filter_map(|c| match *c {
                Constraint::Parity { check, bit } => Some((check, bit)),
                Constraint::NonNegative { .. } => None,
            })
            .collect()
    }
}

/// Checks every cone inequality for `w`, which may hold integers or
/// rationals.
pub fn in_fundamental_cone<T>(h: &BinaryMatrix, w: &[T]) -> Result<ConeReport>
where
    T: Clone + Ord + Zero + for<'a> AddAssign<&'a T>,
{
    if w.len() != h.cols() {
        return Err(Error::LengthMismatch {
            expected: h.cols(),
            actual: w.len(),
        });
    }
    let mut violated = Vec::new();
    let mut active = Vec::new();
    let zero = T::zero();
    for (bit, x) in w.iter().enumerate() {
        match x.cmp(&zero) {
            std::cmp::Ordering::Less => violated.push(Constraint::NonNegative { bit }),
            std::cmp::Ordering::Equal => active.push(Constraint::NonNegative { bit }),
            std::cmp::Ordering::Greater => {}
        }
    }
    for check in 0..h.rows() {
        let support = h.row_support(check);
        let mut total = T::zero();
        for &i in &support {
            total += &w[i];
        }
        for &bit in &support {
            // w_bit <= total - w_bit  <=>  2 w_bit <= total
            let mut twice = w[bit].clone();
            twice += &w[bit];
            match twice.cmp(&total) {
                std::cmp::Ordering::Greater => violated.push(Constraint::Parity { check, bit }),
                std::cmp::Ordering::Equal => active.push(Constraint::Parity { check, bit }),
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Ok(ConeReport {
        member: violated.is_empty(),
        violated,
        active,
    })
}

/// True iff `w` lies in the cone and `w mod 2` is a codeword.
pub fn is_unscaled_pcw(h: &BinaryMatrix, w: &[BigInt]) -> Result<bool> {
    let report = in_fundamental_cone(h, w)?;
    Ok(report.member && is_codeword(h, &mod2_reduce(w))?)
}

/// AWGN-channel pseudo-weight `||w||_1^2 / ||w||_2^2`, kept as an exact ratio.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoWeight {
    ratio: BigRational,
    zero: bool,
}

impl PseudoWeight {
    /// The exact ratio; 0 for the zero vector.
    pub fn ratio(&self) -> &BigRational {
        &self.ratio
    }

    pub fn value(&self) -> f64 {
        self.ratio.to_f64().unwrap_or(f64::INFINITY)
    }

    /// True when the input was the all-zero vector.
    pub fn is_zero_vector(&self) -> bool {
        self.zero
    }
}

pub fn awgnc_pseudoweight(w: &[BigInt]) -> Result<PseudoWeight> {
    if let Some((i, x)) = w.iter().enumerate().find(|(_, x)| x.is_negative()) {
        return Err(Error::InvalidArgument(format!("negative entry {x} at position {i}")));
    }
    let l1: BigInt = w.iter().sum();
    let l2: BigInt = w.iter().map(|x| x * x).sum();
    if l2.is_zero() {
        return Ok(PseudoWeight {
            ratio: BigRational::zero(),
            zero: true,
        });
    }
    Ok(PseudoWeight {
        ratio: BigRational::new(&l1 * &l1, l2),
        zero: false,
    })
}

/// Normals of the tight constraints, one row per active constraint.
fn active_normals(h: &BinaryMatrix, active: &[Constraint]) -> IntMatrix {
    let n = h.cols();
    let mut rows = Vec::with_capacity(active.len());
    for c in active {
        let mut row = vec![0i64; n];
        match *c {
            Constraint::NonNegative { bit } => row[bit] = 1,
            Constraint::Parity { check, bit } => {
                for i in h.row_support(check) {
                    row[i] = 1;
                }
                row[bit] = -1;
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return IntMatrix::zeros(0, n);
    }
    IntMatrix::from_rows(&rows).expect("rows share length n")
}

/// Rank of the active constraint normals at `w`.
pub fn active_rank(h: &BinaryMatrix, w: &[BigInt]) -> Result<usize> {
    let report = in_fundamental_cone(h, w)?;
    Ok(rank_rational(&active_normals(h, &report.active)))
}

/// True iff the nonzero cone member `w` spans an edge (extreme ray) of
/// `K(H)`, i.e. its active constraint normals have rank `n - 1`.
pub fn is_minimal_pcw(h: &BinaryMatrix, w: &[BigInt]) -> Result<bool> {
    let report = in_fundamental_cone(h, w)?;
    if !report.member {
        return Err(Error::Contract(format!(
            "vector is not in the fundamental cone (violates {})",
            report.violated[0]
        )));
    }
    if w.iter().all(Zero::is_zero) {
        return Err(Error::Contract("the zero vector is not on an edge".into()));
    }
    let rank = rank_rational(&active_normals(h, &report.active));
    Ok(rank + 1 == h.cols())
}

/// True iff `w` is a positive multiple of a codeword: dividing by the gcd of
/// its entries leaves a 0/1 vector in the code.
pub fn is_codeword_multiple(h: &BinaryMatrix, w: &[BigInt]) -> Result<bool> {
    if w.len() != h.cols() {
        return Err(Error::LengthMismatch {
            expected: h.cols(),
            actual: w.len(),
        });
    }
    let g = w.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
    if g.is_zero() || w.iter().any(Signed::is_negative) {
        return Ok(false);
    }
    let mut word = Vec::with_capacity(w.len());
    for x in w {
        let q = x / &g;
        if q.is_zero() {
            word.push(0);
        } else if q.is_one() {
            word.push(1);
        } else {
            return Ok(false);
        }
    }
    is_codeword(h, &word)
}

/// Cumulative counts of nonzero-vector pseudo-weights at increasing
/// thresholds. All-zero vectors are tallied separately.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightHistogram {
    pub edges: Vec<f64>,
    /// `counts[k]` is the number of nonzero vectors with weight `<= edges[k]`.
    pub counts: Vec<u64>,
    pub zero_count: u64,
    /// Number of nonzero vectors processed.
    pub total: u64,
}

impl WeightHistogram {
    pub fn empty(edges: &[f64]) -> Result<Self> {
        validate_edges(edges)?;
        Ok(Self {
            edges: edges.to_vec(),
            counts: vec![0; edges.len()],
            zero_count: 0,
            total: 0,
        })
    }

    pub fn add(&mut self, w: &PseudoWeight) {
        if w.is_zero_vector() {
            self.zero_count += 1;
            return;
        }
        self.total += 1;
        let v = w.value();
        let first = self.edges.partition_point(|&e| e < v);
        for c in &mut self.counts[first..] {
            *c += 1;
        }
    }

    /// Adds the counts of `other`, which must use the same edges.
    pub fn merge(&mut self, other: &WeightHistogram) -> Result<()> {
        if self.edges != other.edges {
            return Err(Error::InvalidArgument("cannot merge histograms with different edges".into()));
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.zero_count += other.zero_count;
        self.total += other.total;
        Ok(())
    }

    /// Fraction of nonzero vectors with weight `<= edges[bin]`.
    pub fn cdf(&self, bin: usize) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.counts[bin] as f64 / self.total as f64
        }
    }

    /// CSV with a leading `# zero_count=.. total=..` comment line.
    pub fn to_csv(&self) -> String {
        let mut out = format!("# zero_count={} total={}\nedge,cumulative_count\n", self.zero_count, self.total);
        for (e, c) in self.edges.iter().zip(&self.counts) {
            out.push_str(&format!("{e},{c}\n"));
        }
        out
    }

    /// Whitespace-separated two-column form for gnuplot.
    pub fn to_gnuplot(&self) -> String {
        let mut out = format!("# zero_count={} total={}\n# edge cumulative_count\n", self.zero_count, self.total);
        for (e, c) in self.edges.iter().zip(&self.counts) {
            out.push_str(&format!("{e} {c}\n"));
        }
        out
    }
}

fn validate_edges(edges: &[f64]) -> Result<()> {
    if edges.iter().any(|e| !e.is_finite()) {
        return Err(Error::InvalidArgument("histogram edges must be finite".into()));
    }
    if edges.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("histogram edges must be strictly increasing".into()));
    }
    Ok(())
}

pub fn cumulative_histogram(weights: &[PseudoWeight], edges: &[f64]) -> Result<WeightHistogram> {
    let mut hist = WeightHistogram::empty(edges)?;
    for w in weights {
        hist.add(w);
    }
    Ok(hist)
}

/// `start, start + step, ...` up to and including `stop`.
pub fn uniform_edges(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if step.is_nan() || step <= 0.0 || stop.is_nan() || start.is_nan() || stop < start {
        return Err(Error::InvalidArgument("need step > 0 and stop >= start".into()));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|k| start + step * k as f64).collect())
}
