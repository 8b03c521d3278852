//! Gaussian graphical model `p(u) ∝ exp(-u^T G u / 2)` with
//! `G = eps^2 I + H^T H`.
//!
//! Conditioning on the bits outside `S` leaves the precision matrix
//! `G_S = eps^2 I + H_S^T H_S` on `S`, whose inverse is the conditional
//! covariance. With `gamma^2 = det(G_S)`, the product `gamma^2 * sigma_i^2`
//! equals `det(eps^2 I + H_{S\i}^T H_{S\i})`, a polynomial in `eps^2` whose
//! constant term is `det(H_{S\i})^2`. So `gamma * sigma_i` tends to the absdet
//! entry as `eps -> 0`.
//!
//! The floating path never forms `G_S`. A Householder QR of the stacked
//! matrix `[H_S; eps I]` yields `R` with `R^T R = G_S`, so the error grows with
//! `cond([H_S; eps I]) ~ 1/eps` rather than `cond(G_S) ~ 1/eps^2`. Determinant
//! and inverse both come from `R`. The exact path expands `det(x I + A)` with integer
//! coefficients via Faddeev-LeVerrier.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::linalg::{BinaryMatrix, IntMatrix};
use crate::pcw::{absdet_pcw, ColumnSubset};
use crate::{Error, Result};

/// Default `eps` schedule.
pub const DEFAULT_SCHEDULE: [f64; 4] = [1e-1, 1e-2, 1e-3, 1e-4];
/// Default convergence tolerance, relative to `max(target, 1)`.
pub const DEFAULT_TOLERANCE: f64 = 1e-6;

fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("eps must be a positive finite number, got {eps}")))
    }
}

fn check_subset(h: &BinaryMatrix, s: &ColumnSubset) -> Result<()> {
    if h.rows() >= h.cols() {
        return Err(Error::Contract(format!("need m < n, got a {}x{} matrix", h.rows(), h.cols())));
    }
    if s.len() != h.rows() + 1 {
        return Err(Error::Contract(format!(
            "subset has {} columns, expected m+1 = {}",
            s.len(),
            h.rows() + 1
        )));
    }
    if let Some(&bad) = s.indices().iter().find(|&&i| i >= h.cols()) {
        return Err(Error::IndexOutOfRange { index: bad, bound: h.cols() });
    }
    Ok(())
}

/// `[H_S; eps I]`, whose Gram matrix is `G_S`.
fn stacked(h: &BinaryMatrix, s: &ColumnSubset, eps: f64) -> Result<DMatrix<f64>> {
    check_eps(eps)?;
    check_subset(h, s)?;
    let hs = h.columns(s.indices())?;
    let (m, k) = (hs.rows(), hs.cols());
    let mut c = DMatrix::zeros(m + k, k);
    for j in 0..m {
        for d in 0..k {
            if hs.get(j, d) {
                c[(j, d)] = 1.0;
            }
        }
    }
    for d in 0..k {
        c[(m + d, d)] = eps;
    }
    Ok(c)
}

struct Factored {
    det: f64,
    cov: DMatrix<f64>,
}

fn factor(h: &BinaryMatrix, s: &ColumnSubset, eps: f64) -> Result<Factored> {
    let r = stacked(h, s, eps)?.qr().r();
    let k = r.ncols();
    let det = r.diagonal().iter().map(|x| x * x).product::<f64>();
    let r_inv = r
        .solve_upper_triangular(&DMatrix::identity(k, k))
        .filter(|_| det > 0.0)
        .ok_or_else(|| Error::Numerical(format!("singular factor at eps = {eps}")))?;
    Ok(Factored {
        det,
        cov: &r_inv * r_inv.transpose(),
    })
}

/// Conditional covariance `R = G_S^{-1}` of `U_S` given `U_{S̄}`. Row and
/// column `k` correspond to the `k`-th smallest index of `S`.
pub fn conditional_cov(h: &BinaryMatrix, s: &ColumnSubset, eps: f64) -> Result<DMatrix<f64>> {
    Ok(factor(h, s, eps)?.cov)
}

/// `gamma^2 = det(G_S)`.
pub fn gamma_sq(h: &BinaryMatrix, s: &ColumnSubset, eps: f64) -> Result<f64> {
    Ok(factor(h, s, eps)?.det)
}

/// `gamma^2 * sigma_i^2` for every `i` in `S`, in subset order.
pub fn scaled_variances(h: &BinaryMatrix, s: &ColumnSubset, eps: f64) -> Result<Vec<f64>> {
    let f = factor(h, s, eps)?;
    Ok((0..s.len()).map(|k| f.det * f.cov[(k, k)]).collect())
}

/// `gamma' * exp(h(U_i | U_{S̄}))` with `gamma' = gamma / sqrt(2 pi e)` and
/// the scalar Gaussian differential entropy `h = ln(2 pi e sigma^2) / 2`.
pub fn entropy_form(h: &BinaryMatrix, s: &ColumnSubset, i: usize, eps: f64) -> Result<f64> {
    let pos = s
        .position(i)
        .ok_or_else(|| Error::InvalidArgument(format!("bit {i} is not in the subset")))?;
    let f = factor(h, s, eps)?;
    let two_pi_e = 2.0 * std::f64::consts::PI * std::f64::consts::E;
    let gamma_prime = f.det.sqrt() / two_pi_e.sqrt();
    let entropy = 0.5 * (two_pi_e * f.cov[(pos, pos)]).ln();
    Ok(gamma_prime * entropy.exp())
}

/// Coefficients `c_0..c_k` of `det(x I + A) = sum c_t x^t` for a square
/// integer matrix `A`, by Faddeev-LeVerrier on `-A` (all divisions exact).
pub fn shifted_det_poly(a: &IntMatrix) -> Result<Vec<BigInt>> {
    let n = a.ensure_square()?;
    let b = a.neg();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m = IntMatrix::zeros(n, n);
    for k in 1..=n {
        // M_k = B M_{k-1} + c_{n-k+1} I
        let mut next = b.mul(&m)?;
        for d in 0..n {
            let v = next.get(d, d) + &coeffs[n - k + 1];
            next.set(d, d, v);
        }
        let tr = b.mul(&next)?.trace();
        coeffs[n - k] = -tr / BigInt::from(k);
        m = next;
    }
    Ok(coeffs)
}

/// Evaluates `sum c_t x^t` exactly.
pub fn eval_poly(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

/// Exact `gamma^2 sigma_i^2 = det(eps^2 I + H_{S\i}^T H_{S\i})`, with `eps`
/// taken as the exact binary value of the given float.
pub fn exact_scaled_variance(h: &BinaryMatrix, s: &ColumnSubset, i: usize, eps: f64) -> Result<f64> {
    check_eps(eps)?;
    check_subset(h, s)?;
    if !s.contains(i) {
        return Err(Error::InvalidArgument(format!("bit {i} is not in the subset")));
    }
    let a = h.columns(&s.without(i))?.gram();
    let coeffs = shifted_det_poly(&a)?;
    let e = BigRational::from_float(eps).expect("finite eps");
    let value = eval_poly(&coeffs, &(&e * &e));
    value
        .to_f64()
        .ok_or_else(|| Error::Numerical("exact value does not fit in f64".into()))
}

/// Per-bit convergence record.
#[derive(Clone, Debug, PartialEq)]
pub struct BitRecord {
    pub bit: usize,
    pub in_subset: bool,
    /// `omega_i^2` from the absdet-pseudo-codeword.
    pub target: BigInt,
    /// `gamma^2 sigma_i^2` along the schedule (identically 0 outside `S`).
    pub values: Vec<f64>,
    /// `|value - target| / max(target, 1)` along the schedule.
    pub errors: Vec<f64>,
    pub converged: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussianLimitReport {
    pub schedule: Vec<f64>,
    pub tolerance: f64,
    pub bits: Vec<BitRecord>,
    /// Largest error at the smallest `eps`.
    pub max_error: f64,
}

impl GaussianLimitReport {
    pub fn all_converged(&self) -> bool {
        self.bits.iter().all(|b| b.converged)
    }

    /// True iff every bit's error never increases along the schedule.
    pub fn monotone(&self) -> bool {
        self.bits.iter().all(|b| b.errors.windows(2).all(|w| w[1] <= w[0]))
    }

    /// Rows `i,epsilon,product,target,relative_error`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,epsilon,product,target,relative_error\n");
        for b in &self.bits {
            for ((eps, v), e) in self.schedule.iter().zip(&b.values).zip(&b.errors) {
                out.push_str(&format!("{},{:e},{:.12e},{},{:.6e}\n", b.bit, eps, v, b.target, e));
            }
        }
        out
    }
}

pub fn validate_schedule(schedule: &[f64]) -> Result<()> {
    if schedule.is_empty() {
        return Err(Error::InvalidArgument("eps schedule is empty".into()));
    }
    for &e in schedule {
        check_eps(e)?;
    }
    if schedule.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument("eps schedule must be strictly decreasing".into()));
    }
    Ok(())
}

pub fn verify_gaussian_limit(
    h: &BinaryMatrix,
    s: &ColumnSubset,
    schedule: &[f64],
    tol: f64,
) -> Result<GaussianLimitReport> {
    validate_schedule(schedule)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    check_subset(h, s)?;
    let omega = absdet_pcw(h, s)?;
    let per_eps: Vec<Vec<f64>> = schedule
        .iter()
        .map(|&eps| scaled_variances(h, s, eps))
        .collect::<Result<_>>()?;

    let mut bits = Vec::with_capacity(h.cols());
    for i in 0..h.cols() {
        let target = &omega[i] * &omega[i];
        let (values, in_subset) = match s.position(i) {
            Some(pos) => (per_eps.iter().map(|v| v[pos]).collect::<Vec<_>>(), true),
            None => (vec![0.0; schedule.len()], false),
        };
        let t = target.to_f64().unwrap_or(f64::INFINITY);
        let scale = t.max(1.0);
        let errors: Vec<f64> = values.iter().map(|v| (v - t).abs() / scale).collect();
        let converged = errors.last().is_some_and(|&e| e <= tol);
        bits.push(BitRecord {
            bit: i,
            in_subset,
            target,
            values,
            errors,
            converged,
        });
    }
    let max_error = bits.iter().filter_map(|b| b.errors.last().copied()).fold(0.0, f64::max);
    Ok(GaussianLimitReport {
        schedule: schedule.to_vec(),
        tolerance: tol,
        bits,
        max_error,
    })
}
