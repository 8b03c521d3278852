//! Fraction-free (Bareiss) determinants.
//!
//! Every intermediate value of Bareiss elimination is a minor of the input,
//! so small 0/1 matrices stay well inside `i128`. Arithmetic is checked and
//! falls back to `BigInt` on overflow.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BinaryMatrix, IntMatrix};
use crate::Result;

/// Exact determinant over the integers. The 0x0 determinant is 1.
pub fn det_int(m: &IntMatrix) -> Result<BigInt> {
    let n = m.ensure_square()?;
    if let Some(small) = m.to_i128() {
        if let Some(d) = bareiss_i128(small, n) {
            return Ok(BigInt::from(d));
        }
    }
    Ok(bareiss_big(m.data().to_vec(), n))
}

/// Determinant of a square 0/1 matrix read over the integers.
pub fn det_binary(h: &BinaryMatrix) -> Result<BigInt> {
    let n = h.rows();
    if n != h.cols() {
        return Err(crate::Error::NotSquare { rows: n, cols: h.cols() });
    }
    let small: Vec<i128> = h.raw().iter().map(|&b| b as i128).collect();
    match bareiss_i128(small, n) {
        Some(d) => Ok(BigInt::from(d)),
        None => Ok(bareiss_big(h.raw().iter().map(|&b| BigInt::from(b)).collect(), n)),
    }
}

fn bareiss_i128(mut a: Vec<i128>, n: usize) -> Option<i128> {
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k * n + k] == 0 {
            let pivot = (k + 1..n).find(|&r| a[r * n + k] != 0);
            match pivot {
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        let pivot = a[k * n + k];
        for r in k + 1..n {
            let lead = a[r * n + k];
            for c in k + 1..n {
                let num = pivot
                    .checked_mul(a[r * n + c])?
                    .checked_sub(lead.checked_mul(a[k * n + c])?)?;
                a[r * n + c] = num / prev;
            }
            a[r * n + k] = 0;
        }
        prev = pivot;
    }
    Some(if n == 0 { 1 } else { sign * a[n * n - 1] })
}

fn bareiss_big(mut a: Vec<BigInt>, n: usize) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        a.swap(k * n + c, r * n + c);
                    }
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot = a[k * n + k].clone();
        for r in k + 1..n {
            let lead = a[r * n + k].clone();
            for c in k + 1..n {
                let num = &pivot * &a[r * n + c] - &lead * &a[k * n + c];
                a[r * n + c] = num / &prev;
            }
            a[r * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    if n == 0 {
        return BigInt::one();
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
