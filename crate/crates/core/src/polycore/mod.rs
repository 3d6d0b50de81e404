//! Exact arithmetic substrate: rationals, sparse multivariate polynomials,
//! polynomial matrices and dense rational linear algebra.

pub mod linalg;
pub mod matrix;
mod parse;
pub mod polynomial;
pub mod rational;

use thiserror::Error;

pub use linalg::RatMatrix;
pub use matrix::PolyMatrix;
pub use polynomial::{default_names, Monomial, Polynomial};
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("malformed rational '{0}'")]
    BadRational(String),
    #[error("parse error at offset {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("shape error: {0}")]
    Shape(String),
}
