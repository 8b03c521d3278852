use num_bigint::BigInt;
use num_traits::Zero;

use super::{BinaryMatrix, IntMatrix};

/// Row rank over GF(2).
pub fn rank_gf2(h: &BinaryMatrix) -> usize {
    let words = h.cols().div_ceil(64);
    let mut rows: Vec<Vec<u64>> = (0..h.rows())
        .map(|j| {
            let mut w = vec![0u64; words];
            for (i, &b) in h.row(j).iter().enumerate() {
                if b == 1 {
                    w[i / 64] |= 1 << (i % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for col in 0..h.cols() {
        let (word, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][word] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[word] & bit != 0 {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over the rationals, by fraction-free elimination on integer rows.
pub fn rank_rational(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows).map(|r| (0..cols).map(|c| m.get(r, c).clone()).collect()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot_row = a[rank].clone();
        let pivot = pivot_row[col].clone();
        for row in a.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let lead = row[col].clone();
            for c in col..cols {
                row[c] = &pivot * &row[c] - &lead * &pivot_row[c];
            }
            // keep entries small: divide out the row content
            let g = row.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
            if !g.is_zero() && g != BigInt::from(1) {
                row.iter_mut().for_each(|x| *x /= &g);
            }
        }
        rank += 1;
    }
    rank
}
