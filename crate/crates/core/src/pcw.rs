//! Det-vectors, absdet-pseudo-codewords and perm-pseudo-codewords.
//!
//! For `H` with `m < n` and a sorted size-`(m+1)` column subset `S`, the
//! det-vector has `nu_i = (-1)^pos(i) * det(H_{S\i})` for `i` in `S` and zero
//! elsewhere, where `pos(i)` is the position of `i` inside `S`. The absdet
//! vector takes absolute values, the perm vector replaces determinants by
//! permanents. All three are computed exactly over the integers.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::linalg::{det_binary, perm_binary, BinaryMatrix};
use crate::{Error, Result};

/// A length-`n` vector of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![BigInt::zero(); n])
    }

    pub fn from_i64s(values: &[i64]) -> Self {
        Self(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }

    pub fn abs(&self) -> Self {
        Self(self.0.iter().map(Signed::abs).collect())
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| i).collect()
    }

    /// Greatest common divisor of the entries (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self(self.0.iter().map(|x| x * factor).collect())
    }
}

impl Deref for IntVector {
    type Target = [BigInt];

    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

impl From<Vec<BigInt>> for IntVector {
    fn from(v: Vec<BigInt>) -> Self {
        Self(v)
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Space-separated decimal entries.
impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for IntVector {
    type Err = Error;

    /// Accepts entries separated by whitespace and/or commas, optionally
    /// wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| Error::InvalidArgument(format!("not an integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

/// A strictly increasing set of column indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnSubset(Vec<usize>);

impl ColumnSubset {
    /// Sorts and validates `indices` against `n` columns. Duplicates are
    /// rejected.
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("duplicate column index {}", w[0])));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, bound: n });
        }
        Ok(Self(indices))
    }

    /// Every column index `0..n`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Position of `i` within the sorted subset.
    pub fn position(&self, i: usize) -> Option<usize> {
        self.0.binary_search(&i).ok()
    }

    /// The subset with `i` removed, still sorted.
    pub fn without(&self, i: usize) -> Vec<usize> {
        self.0.iter().copied().filter(|&k| k != i).collect()
    }

    /// `I(H) \ S` for `n` columns.
    pub fn complement(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|&i| !self.contains(i)).collect()
    }
}

impl fmt::Debug for ColumnSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl fmt::Display for ColumnSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Lexicographic stream of all `k`-subsets of `0..n`.
#[derive(Clone, Debug)]
pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = ColumnSubset;

    fn next(&mut self) -> Option<ColumnSubset> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        // rightmost position that can still move right
        match (0..k).rev().find(|&p| next[p] < self.n - k + p) {
            Some(p) => {
                next[p] += 1;
                for q in p + 1..k {
                    next[q] = next[q - 1] + 1;
                }
                self.current = Some(next);
            }
            None => self.current = None,
        }
        Some(ColumnSubset(out))
    }
}

/// All `k`-element subsets of `0..n` in lexicographic order. Yields nothing
/// when `k > n`.
pub fn enumerate_subsets(n: usize, k: usize) -> Subsets {
    Subsets {
        n,
        current: (k <= n).then(|| (0..k).collect()),
    }
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
}

/// Which vector to build from a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PcwKind {
    Det,
    Absdet,
    Perm,
}

impl PcwKind {
    pub fn compute(self, h: &BinaryMatrix, s: &ColumnSubset) -> Result<IntVector> {
        match self {
            PcwKind::Det => det_vector(h, s),
            PcwKind::Absdet => absdet_pcw(h, s),
            PcwKind::Perm => perm_pcw(h, s),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PcwKind::Det => "det",
            PcwKind::Absdet => "absdet",
            PcwKind::Perm => "perm",
        }
    }
}

impl FromStr for PcwKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "det" => Ok(PcwKind::Det),
            "absdet" => Ok(PcwKind::Absdet),
            "perm" => Ok(PcwKind::Perm),
            other => Err(Error::InvalidArgument(format!(
                "unknown kind {other:?} (expected det, absdet or perm)"
            ))),
        }
    }
}

impl fmt::Display for PcwKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_subset(h: &BinaryMatrix, s: &ColumnSubset) -> Result<()> {
    let (m, n) = (h.rows(), h.cols());
    if m >= n {
        return Err(Error::Contract(format!("need m < n, got a {m}x{n} matrix")));
    }
    if s.len() != m + 1 {
        return Err(Error::Contract(format!(
            "subset has {} columns, expected m+1 = {}",
            s.len(),
            m + 1
        )));
    }
    if let Some(&bad) = s.indices().iter().find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange { index: bad, bound: n });
    }
    Ok(())
}

fn minors<F>(h: &BinaryMatrix, s: &ColumnSubset, mut f: F) -> Result<IntVector>
where
    F: FnMut(usize, &BinaryMatrix) -> Result<BigInt>,
{
    check_subset(h, s)?;
    let mut out = vec![BigInt::zero(); h.cols()];
    for (pos, &i) in s.indices().iter().enumerate() {
        let sub = h.columns(&s.without(i))?;
        out[i] = f(pos, &sub)?;
    }
    Ok(IntVector(out))
}

/// The det-vector `nu` based on `s`.
pub fn det_vector(h: &BinaryMatrix, s: &ColumnSubset) -> Result<IntVector> {
    minors(h, s, |pos, sub| {
        let d = det_binary(sub)?;
        Ok(if pos % 2 == 1 { -d } else { d })
    })
}

/// The absdet-pseudo-codeword based on `s`.
pub fn absdet_pcw(h: &BinaryMatrix, s: &ColumnSubset) -> Result<IntVector> {
    minors(h, s, |_, sub| Ok(det_binary(sub)?.abs()))
}

/// The perm-pseudo-codeword based on `s`.
pub fn perm_pcw(h: &BinaryMatrix, s: &ColumnSubset) -> Result<IntVector> {
    minors(h, s, |_, sub| perm_binary(sub))
}

/// `H v^T` over the integers.
pub fn z_syndrome(h: &BinaryMatrix, v: &[BigInt]) -> Result<IntVector> {
    if v.len() != h.cols() {
        return Err(Error::LengthMismatch {
            expected: h.cols(),
            actual: v.len(),
        });
    }
    Ok(IntVector(
        (0..h.rows())
            .map(|j| {
                h.row(j)
                    .iter()
                    .zip(v)
                    .filter(|(&b, _)| b == 1)
                    .map(|(_, x)| x)
                    .sum()
            })
            .collect(),
    ))
}

/// Componentwise reduction modulo 2 into `{0, 1}`.
pub fn mod2_reduce(v: &[BigInt]) -> Vec<u8> {
    v.iter().map(|x| u8::from(x.is_odd())).collect()
}

/// True iff `H c^T = 0` over GF(2).
pub fn is_codeword(h: &BinaryMatrix, c: &[u8]) -> Result<bool> {
    Ok(h.syndrome(c)?.iter().all(|&s| s == 0))
}
