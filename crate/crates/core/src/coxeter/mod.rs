//! Coxeter matrices, finite-type recognition, Solomon and Steinberg formulas.

mod label;
mod matrix;
mod parabolic;

pub use label::{classify_component, Classification, FiniteTypeLabel};
pub use matrix::{CoxeterMatrix, Order};
pub use parabolic::{finite_parabolic_subsets, solomon_series, steinberg_growth, ParabolicCatalog, ParabolicSubset};

use thiserror::Error;

use crate::polyarith::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("malformed Coxeter matrix: {0}")]
    Malformed(String),
    #[error("diagonal entry {index} is {found}, expected 1")]
    Diagonal { index: usize, found: Order },
    #[error("orders[{i}][{j}] differs from orders[{j}][{i}]")]
    Asymmetric { i: usize, j: usize },
    #[error("off-diagonal order at ({i}, {j}) must be at least 2 or infinite")]
    OffDiagonalOne { i: usize, j: usize },
    #[error("generator subset {0:?} is not connected")]
    Disconnected(Vec<usize>),
    #[error("invalid finite type label {0:?}")]
    InvalidLabel(String),
    #[error("internal error: alternating parabolic sum vanished")]
    ZeroAlternatingSum,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
