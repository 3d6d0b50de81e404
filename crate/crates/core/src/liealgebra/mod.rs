//! Lie algebras given by structure constants, scalar 2-cocycles, and the
//! purely algebraic checks built on them.

mod algebra;
mod checks;
mod multivector;

use std::fmt;

use thiserror::Error;

use crate::polycore::{format_rational, Rational};

pub use algebra::{StructureConstants, TwoCocycle};
pub use checks::{
    check_cocycle, check_jacobi, check_nondegenerate, check_unimodular, derived_series, lower_central_series,
    AlgebraReport, SeriesReport,
};
pub use multivector::{check_cybe, cybe_tensor, yang_baxter_r, ConstMultiVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket pair ({i}, {j}) must satisfy i < j")]
    IndexOrder { i: usize, j: usize },
    #[error("pair ({i}, {j}) given more than once")]
    Duplicate { i: usize, j: usize },
    #[error("cocycle is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("{count} basis names given for dimension {dim}")]
    Names { count: usize, dim: usize },
    #[error("arity {arity} invalid for dimension {dim}")]
    Arity { arity: usize, dim: usize },
    #[error(transparent)]
    Violation(#[from] Violation),
}

/// A failed algebraic check together with the data that exhibits it.
/// Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    /// Component `l` of the Jacobiator on `(e_i, e_j, e_k)` is `value`.
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        value: Rational,
    },
    /// `ω([e_i,e_j],e_k) + cyclic = value`.
    Cocycle {
        i: usize,
        j: usize,
        k: usize,
        value: Rational,
    },
    /// The cocycle matrix has rank below the dimension.
    Degenerate { rank: usize, dim: usize },
    /// `trace(ad e_basis) = trace`.
    NotUnimodular { basis: usize, trace: Rational },
    /// The lower central series stalls at a nonzero ideal.
    NotNilpotent { stable_dim: usize, step: usize },
    /// Component `(i,j,k)` of the algebraic `[r,r]` is `value`.
    Cybe {
        i: usize,
        j: usize,
        k: usize,
        value: Rational,
    },
    /// The cocycle's dimension disagrees with the algebra's.
    DimensionMismatch { algebra: usize, cocycle: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Jacobi { i, j, k, l, value } => write!(
                f,
                "Jacobi identity fails on (e{}, e{}, e{}): component e{} is {}",
                i + 1,
                j + 1,
                k + 1,
                l + 1,
                format_rational(value)
            ),
            Violation::Cocycle { i, j, k, value } => write!(
                f,
                "cocycle identity fails on (e{}, e{}, e{}): sum is {}",
                i + 1,
                j + 1,
                k + 1,
                format_rational(value)
            ),
            Violation::Degenerate { rank, dim } => {
                write!(f, "cocycle is degenerate: rank {rank} < {dim}")
            }
            Violation::NotUnimodular { basis, trace } => write!(
                f,
                "not unimodular: trace(ad e{}) = {}",
                basis + 1,
                format_rational(trace)
            ),
            Violation::NotNilpotent { stable_dim, step } => write!(
                f,
                "not nilpotent: lower central series stabilizes at dimension {stable_dim} from step {step}"
            ),
            Violation::Cybe { i, j, k, value } => write!(
                f,
                "classical Yang-Baxter equation fails at (e{}, e{}, e{}): {}",
                i + 1,
                j + 1,
                k + 1,
                format_rational(value)
            ),
            Violation::DimensionMismatch { algebra, cocycle } => write!(
                f,
                "cocycle dimension {cocycle} does not match algebra dimension {algebra}"
            ),
        }
    }
}
