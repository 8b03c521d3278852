//! Parity-check matrix generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::BinaryMatrix;
use crate::tanner::four_cycle_count;
use crate::{Error, Result};

/// Attempts made by [`random_regular_ldpc`] before giving up.
pub const DEFAULT_PAIRING_ATTEMPTS: usize = 10_000;

/// The 2x4 parity-check matrix of the [4,2,2] code.
pub fn example_h422() -> BinaryMatrix {
    BinaryMatrix::from_rows(&[[1, 1, 1, 0], [0, 1, 1, 1]]).expect("static matrix")
}

/// Dumbbell-graph code: two cycles of `k` bits and `k` checks each, joined by
/// a bridge bit.
///
/// Bits `0..k` and checks `0..k` form the first cycle (check `j` joins bits
/// `j` and `(j+1) mod k`), bit `k` is the bridge, and bits `k+1..=2k` with
/// checks `k..2k` form the second cycle. The bridge sits on check `k-1` of the
/// first cycle and check `k` of the second, so the matrix is `2k x (2k+1)`.
pub fn dumbbell(k: usize) -> Result<BinaryMatrix> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("dumbbell cycles need k >= 3, got {k}")));
    }
    let mut ones = Vec::with_capacity(4 * k + 2);
    for j in 0..k {
        ones.push((j, j));
        ones.push((j, (j + 1) % k));
        ones.push((k + j, k + 1 + j));
        ones.push((k + j, k + 1 + (j + 1) % k));
    }
    ones.push((k - 1, k));
    ones.push((k, k));
    BinaryMatrix::from_ones(2 * k, 2 * k + 1, &ones)
}

/// Random parity-check matrix whose Tanner graph is a tree with `n` bits and
/// `m` checks, `1 <= m < n`.
///
/// The tree grows from one bit: every new check hangs off a uniformly chosen
/// existing bit and every new bit off an existing check. Row and column
/// labels are shuffled at the end.
pub fn random_tree(n: usize, m: usize, seed: u64) -> Result<BinaryMatrix> {
    if m == 0 || m >= n {
        return Err(Error::InvalidArgument(format!("tree code needs 1 <= m < n, got m = {m}, n = {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // true = check; the first node added after bit 0 must be a check
    let mut order: Vec<bool> = std::iter::repeat_n(true, m - 1).chain(std::iter::repeat_n(false, n - 1)).collect();
    order.shuffle(&mut rng);
    order.insert(0, true);
    let (mut bits, mut checks) = (1usize, 0usize);
    let mut ones = Vec::with_capacity(n + m - 1);
    for is_check in order {
        if is_check {
            ones.push((checks, rng.gen_range(0..bits)));
            checks += 1;
        } else {
            ones.push((rng.gen_range(0..checks), bits));
            bits += 1;
        }
    }
    let mut row_label: Vec<usize> = (0..m).collect();
    let mut col_label: Vec<usize> = (0..n).collect();
    row_label.shuffle(&mut rng);
    col_label.shuffle(&mut rng);
    let ones: Vec<(usize, usize)> = ones.into_iter().map(|(j, i)| (row_label[j], col_label[i])).collect();
    BinaryMatrix::from_ones(m, n, &ones)
}

/// Parameters of a `(dv, dc)`-regular LDPC matrix of block length `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LdpcSpec {
    pub n: usize,
    pub dv: usize,
    pub dc: usize,
    pub seed: u64,
}

impl LdpcSpec {
    /// Number of checks `n * dv / dc`.
    pub fn checks(&self) -> usize {
        self.n * self.dv / self.dc
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.dv == 0 || self.dc == 0 {
            return Err(Error::InvalidArgument("n, dv and dc must be positive".into()));
        }
        if !(self.n * self.dv).is_multiple_of(self.dc) {
            return Err(Error::InvalidArgument(format!(
                "n*dv = {} is not divisible by dc = {}",
                self.n * self.dv,
                self.dc
            )));
        }
        if self.dc > self.n || self.dv > self.checks() {
            return Err(Error::InvalidArgument("degrees exceed the opposite side".into()));
        }
        Ok(())
    }
}

/// Configuration-model pairing of `n*dv` bit sockets with `m*dc` check
/// sockets. Pairings that would place two edges between the same bit and
/// check are rejected and redrawn.
pub fn random_regular_ldpc(spec: &LdpcSpec) -> Result<BinaryMatrix> {
    random_regular_ldpc_with_budget(spec, DEFAULT_PAIRING_ATTEMPTS)
}

pub fn random_regular_ldpc_with_budget(spec: &LdpcSpec, attempts: usize) -> Result<BinaryMatrix> {
    spec.validate()?;
    let m = spec.checks();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut sockets: Vec<usize> = (0..spec.n).flat_map(|i| std::iter::repeat_n(i, spec.dv)).collect();
    'attempt: for _ in 0..attempts {
        sockets.shuffle(&mut rng);
        let mut h = BinaryMatrix::zeros(m, spec.n);
        for (slot, &bit) in sockets.iter().enumerate() {
            let check = slot / spec.dc;
            if h.get(check, bit) {
                continue 'attempt;
            }
            h.set(check, bit, true);
        }
        return Ok(h);
    }
    Err(Error::RetryBudgetExhausted(attempts))
}

/// Result of [`remove_four_cycles`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapOutcome {
    /// Final matrix, or the best one found when the budget ran out.
    pub matrix: BinaryMatrix,
    pub four_cycles: usize,
    pub iterations: usize,
    pub accepted_swaps: usize,
    /// True iff the final matrix has no four-cycles.
    pub converged: bool,
}

/// Hill-climbing double-edge swaps that never increase the four-cycle count.
///
/// Each iteration picks two edges `(j, i)` and `(j', i')` and rewires them to
/// `(j, i')` and `(j', i)` if that creates no parallel edge and does not
/// increase the number of four-cycles. Row and column weights are preserved.
pub fn remove_four_cycles(h: &BinaryMatrix, seed: u64, max_iters: usize) -> SwapOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = h.clone();
    let mut count = four_cycle_count(&current);
    let mut edges = current.ones_positions();
    let mut accepted = 0;
    let mut iterations = 0;
    while count > 0 && iterations < max_iters && edges.len() >= 2 {
        iterations += 1;
        let a = rng.gen_range(0..edges.len());
        let b = rng.gen_range(0..edges.len());
        let ((j, i), (j2, i2)) = (edges[a], edges[b]);
        if j == j2 || i == i2 || current.get(j, i2) || current.get(j2, i) {
            continue;
        }
        current.set(j, i, false);
        current.set(j2, i2, false);
        current.set(j, i2, true);
        current.set(j2, i, true);
        let next = four_cycle_count(&current);
        if next <= count {
            count = next;
            edges[a] = (j, i2);
            edges[b] = (j2, i);
            accepted += 1;
        } else {
            current.set(j, i2, false);
            current.set(j2, i, false);
            current.set(j, i, true);
            current.set(j2, i2, true);
        }
    }
    SwapOutcome {
        matrix: current,
        four_cycles: count,
        iterations,
        accepted_swaps: accepted,
        converged: count == 0,
    }
}
