//! Closed forms for `f_b` and `g_n`, the determinant pipeline with its
//! `f · g · h²` split, the non-norm certificate, and the verdict.

mod closed;
mod norm;
mod pipeline;
mod tables;
mod verdict;

use thiserror::Error;

use crate::homology::{HomologyError, SpecError};
use crate::polymat::MatrixError;
use crate::repcover::RepError;

pub use closed::{beta, decompose, f_poly, g_matrix, g_matrix_route, g_poly, psi};
pub use norm::{eisenstein_at_2, lakatos_check, lakatos_decompose, symmetric_descent, LakatosData};
pub use pipeline::{
    divide, extract_g, extract_h, h_from_blocks, twisted_reduced_polynomial, twisted_reduced_polynomial_with,
    ReducedTAP, TapFactors,
};
pub use tables::{
    generate_table, parse_golden, table_row, verify_table, GoldenParseError, GoldenRow, Mismatch, TableCheck, TableRow,
    GOLDEN_TABLES,
};
pub use verdict::{f_divides_g, norm_obstruction_verdict, ChainReport, Mode, ObstructionReport, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructError {
    #[error("2n = {b}·{p} + {a} for n = {n} needs 0 < a < p − 1 and b ≥ 1")]
    BadDecomposition { n: i64, p: u64, a: i64, b: i64 },
    #[error("b must be at least 1, got {0}")]
    BNotPositive(i64),
    #[error("{0} came out as the zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("1 + t does not divide det(G_n) for n = {n}, p = {p}")]
    NotDivisibleByOnePlusT { n: i64, p: u64 },
    #[error("{0} is not symmetric")]
    NotSymmetric(String),
    #[error("{0} does not have even degree at least 2")]
    NotLakatosShape(String),
    #[error("exact division failed: {0}")]
    NotDivisible(&'static str),
    #[error("the cofactor is not a perfect square")]
    NotASquare,
    #[error("det Φ(Z) vanishes")]
    DegenerateDeterminant,
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Spec(#[from] SpecError),
}
