//! Matrices over Laurent polynomial rings and over 𝔽₂[t].

mod det;
mod gf2module;
mod matrix;

use thiserror::Error;

pub use det::{det_eval_interp, int_det, interpolate, DetStrategy, EXTRA_POINTS};
pub use gf2module::{gf2t_module_reduce, reduce_presentation, Gf2Matrix, ModuleStructure, ReductionMove};
pub use matrix::{IntMatrix, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("rows or blocks have inconsistent sizes")]
    Ragged,
    #[error("cofactor expansion supports at most 64 columns, got {0}")]
    TooLarge(usize),
    #[error("fraction-free elimination hit an inexact division")]
    InexactElimination,
    #[error("need at least {need} evaluation points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("evaluation points must be distinct")]
    DuplicatePoints,
    #[error("interpolated determinant has non-integral coefficients")]
    NonIntegralInterpolant,
    #[error("interpolated determinant disagrees with the sample at t = {point}")]
    InterpolationMismatch { point: String },
}
