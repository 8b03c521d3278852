//! Absdet-pseudo-codewords and perm-pseudo-codewords of binary parity-check
//! matrices.
//!
//! For an `m x n` parity-check matrix `H` with `m < n` and a size-`(m+1)`
//! column subset `S`, the vectors built from the integer determinants and
//! permanents of the column-deleted submatrices `H_{S\i}` are integer points of
//! the fundamental cone of `H` whose mod-2 reduction is a codeword. This crate
//! builds those vectors exactly, checks the cone and codeword properties,
//! analyzes the Tanner graph, computes AWGN-channel pseudo-weights and checks
//! the Gaussian graphical model limit that recovers absdet entries.
//!
//! Module map:
//!
//! * [`linalg`]: binary and integer matrices, exact determinants, permanents
//!   and ranks.
//! * [`pcw`]: column subsets, det-vectors, absdet- and perm-pseudo-codewords.
//! * [`cone`]: fundamental-cone membership, minimality, pseudo-weights and
//!   cumulative histograms.
//! * [`tanner`]: Tanner graph analytics and canonical completion.
//! * [`gaussian`]: conditional covariances of the Gaussian model.
//! * [`codegen`]: example codes, random regular LDPC matrices and four-cycle
//!   removal.

pub mod codegen;
pub mod cone;
mod error;
pub mod gaussian;
pub mod linalg;
pub mod pcw;
pub mod tanner;

pub use error::{Error, Result};
pub use linalg::{BinaryMatrix, IntMatrix};
pub use pcw::{ColumnSubset, IntVector, PcwKind};
