//! Exact integer polynomials and rational functions.

mod poly;
mod rational;
mod text;

pub use poly::{bracket, bracket_product, IntPolynomial};
pub use rational::{rational_sum, RationalFunction, Sign};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid bracket order {0}: orders start at 1")]
    InvalidBracket(u32),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible: remainder {remainder}")]
    NotDivisible { remainder: IntPolynomial },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("operation undefined for the zero rational function")]
    ZeroInput,
    #[error("denominator vanishes at t = 0")]
    PoleAtOrigin,
    #[error("power series coefficient {index} is not an integer")]
    NonIntegralCoefficient { index: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
