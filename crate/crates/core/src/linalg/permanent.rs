//! Ryser's inclusion-exclusion permanent with Gray-code column subsets.
//!
//! `perm(A) = (-1)^n * sum over column subsets T of (-1)^|T| * prod_r (sum_{c in T} a_{r,c})`.
//! Consecutive Gray-code subsets differ in one column, so each step updates
//! the row sums in O(n).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BinaryMatrix, IntMatrix};
use crate::{Error, Result};

/// Largest dimension accepted by [`perm_int`] and [`perm_binary`].
pub const DEFAULT_PERMANENT_CAP: usize = 24;

pub fn perm_int(m: &IntMatrix) -> Result<BigInt> {
    perm_int_with_cap(m, DEFAULT_PERMANENT_CAP)
}

pub fn perm_int_with_cap(m: &IntMatrix, cap: usize) -> Result<BigInt> {
    let n = m.ensure_square()?;
    if n > cap {
        return Err(Error::PermanentTooLarge { dim: n, cap });
    }
    match m.to_i128() {
        Some(small) if small.iter().all(|x| x.unsigned_abs() <= i64::MAX as u128) => Ok(ryser_small(&small, n)),
        _ => Ok(ryser_big(m.data(), n)),
    }
}

/// Permanent of a square 0/1 matrix; equals the number of perfect matchings
/// of its bipartite graph.
pub fn perm_binary(h: &BinaryMatrix) -> Result<BigInt> {
    let n = h.rows();
    if n != h.cols() {
        return Err(Error::NotSquare { rows: n, cols: h.cols() });
    }
    if n > DEFAULT_PERMANENT_CAP {
        return Err(Error::PermanentTooLarge {
            dim: n,
            cap: DEFAULT_PERMANENT_CAP,
        });
    }
    let small: Vec<i128> = h.raw().iter().map(|&b| b as i128).collect();
    Ok(ryser_small(&small, n))
}

// Row sums stay in i128 (n <= cap entries of magnitude < 2^63); products and
// the running total spill into BigInt only when they overflow.
fn ryser_small(a: &[i128], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut row_sums = vec![0i128; n];
    let mut in_set = vec![false; n];
    let mut total_small: i128 = 0;
    let mut total_big = BigInt::zero();
    let mut size = 0usize;
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        let add = !in_set[col];
        in_set[col] = add;
        if add {
            size += 1;
        } else {
            size -= 1;
        }
        for (r, sum) in row_sums.iter_mut().enumerate() {
            let v = a[r * n + col];
            if add {
                *sum += v;
            } else {
                *sum -= v;
            }
        }
        if row_sums.contains(&0) {
            continue;
        }
        let odd = (n - size) % 2 == 1;
        match row_sums.iter().try_fold(1i128, |acc, &s| acc.checked_mul(s)) {
            Some(p) => {
                let term = if odd { -p } else { p };
                match total_small.checked_add(term) {
                    Some(t) => total_small = t,
                    None => {
                        total_big += BigInt::from(total_small) + BigInt::from(term);
                        total_small = 0;
                    }
                }
            }
            None => {
                let p: BigInt = row_sums.iter().map(|&s| BigInt::from(s)).product();
                if odd {
                    total_big -= p;
                } else {
                    total_big += p;
                }
            }
        }
    }
    total_big + BigInt::from(total_small)
}

fn ryser_big(a: &[BigInt], n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut row_sums = vec![BigInt::zero(); n];
    let mut in_set = vec![false; n];
    let mut total = BigInt::zero();
    let mut size = 0usize;
    for k in 1u64..(1u64 << n) {
        let col = k.trailing_zeros() as usize;
        let add = !in_set[col];
        in_set[col] = add;
        if add {
            size += 1;
        } else {
            size -= 1;
        }
        for (r, sum) in row_sums.iter_mut().enumerate() {
            if add {
                *sum += &a[r * n + col];
            } else {
                *sum -= &a[r * n + col];
            }
        }
        let p: BigInt = row_sums.iter().product();
        if (n - size) % 2 == 1 {
            total -= p;
        } else {
            total += p;
        }
    }
    total
}
