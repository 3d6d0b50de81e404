//! Exact affine-chart models of symplectic Lie groups.
//!
//! Given a Lie algebra by structure constants and a non-degenerate scalar
//! 2-cocycle, this crate builds the polynomial Poisson and symplectic
//! matrices of the associated left-invariant affine structure, the
//! right- and left-invariant polynomial tensors, and the checks that
//! certify their degree bounds.

pub mod affinechart;
pub mod catalog;
pub mod cli;
pub mod generate;
pub mod leftinvariant;
pub mod liealgebra;
pub mod polycore;
pub mod tensorcalc;
