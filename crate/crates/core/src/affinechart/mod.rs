//! The affine-chart model of a symplectic Lie group.
//!
//! Coordinates `x_i` are centered at the identity and normalized so that
//! the right-invariant field `u_i⁻` is Hamiltonian for `x_i`. In these
//! coordinates the Poisson matrix is affine,
//! `P_ij(x) = Σ_k C^k_ij x_k + ω_ij`, its columns are the right-invariant
//! fields, and its inverse `S` (when polynomial) holds the right-invariant
//! 1-forms in its rows.

mod degrees;
mod tensors;

use std::sync::OnceLock;

use num_traits::Zero;
use thiserror::Error;

use crate::liealgebra::{
    check_cocycle, check_jacobi, check_nondegenerate, LieError, StructureConstants, TwoCocycle, Violation,
};
use crate::polycore::{default_names, PolyError, PolyMatrix, Polynomial, Rational};
use crate::tensorcalc::{PolyMultiVector, TensorError};

pub use degrees::{bracket_degree_dichotomy, degree_table, DegreeCheck};
pub use tensors::{
    commuting_frame_check, is_parallel, poisson_bracket, right_invariant_field, right_invariant_form,
    right_multivector, symplectic_form, symplectic_matrix, volume_check, volume_form, SymplecticMatrix, VolumeReport,
};
pub(crate) use tensors::{extend_multivector, polynomial_s};

/// `[u⁻, v⁻] = RIGHT_BRACKET_SIGN · [u, v]⁻` for chart vector fields.
pub const RIGHT_BRACKET_SIGN: i32 = -1;
/// `[u⁺, v⁺] = LEFT_BRACKET_SIGN · [u, v]⁺` for chart vector fields.
pub const LEFT_BRACKET_SIGN: i32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartError {
    #[error("algebraic precondition failed: {0}")]
    Precondition(Violation),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("Poisson matrix determinant vanishes identically")]
    Degenerate,
    #[error("non-polynomial inverse (non-unimodular): det = {det}")]
    NonUnimodular { det: String },
    #[error("dimension {0} is odd")]
    OddDimension(usize),
    #[error("expected a vector of length {expected}, found {found}")]
    VectorLength { expected: usize, found: usize },
    #[error("{count} chart names given for dimension {dim}")]
    Names { count: usize, dim: usize },
    #[error("frame field {index} has non-constant coefficients")]
    FrameNotConstant { index: usize },
    #[error("frame fields {i} and {j} do not commute")]
    FrameNotCommuting { i: usize, j: usize },
    #[error("left-invariant solver refused: {0}")]
    NotNilpotent(Violation),
    #[error("left-invariant solver exceeded degree {cap}")]
    DegreeCap { cap: usize },
    #[error("left-invariant solver found inconsistent mixed partials at degree {degree}")]
    MixedPartials { degree: usize },
}

/// The affine-chart package of `(G, ω⁺)`.
#[derive(Clone, Debug)]
pub struct ChartModel {
    algebra: StructureConstants,
    omega: TwoCocycle,
    p: PolyMatrix,
    names: Vec<String>,
    symplectic: OnceLock<Result<SymplecticMatrix, ChartError>>,
}

impl PartialEq for ChartModel {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.omega == other.omega && self.names == other.names
    }
}

/// Builds the chart after checking Jacobi, the cocycle identity and
/// non-degeneracy.
pub fn build_chart(c: &StructureConstants, omega: &TwoCocycle) -> Result<ChartModel, ChartError> {
    check_jacobi(c).map_err(ChartError::Precondition)?;
    check_cocycle(omega, c).map_err(ChartError::Precondition)?;
    check_nondegenerate(omega).map_err(ChartError::Precondition)?;
    Ok(ChartModel::new_unchecked(c, omega))
}

impl ChartModel {
    /// Forms `P(x)` without any algebraic checks. Useful for probing what
    /// the geometric tests report on invalid input.
    ///
    /// # Panics
    /// If the algebra and cocycle dimensions differ.
    pub fn new_unchecked(c: &StructureConstants, omega: &TwoCocycle) -> ChartModel {
        let n = c.dim();
        assert_eq!(n, omega.dim(), "algebra and cocycle dimensions differ");
        let mut p = PolyMatrix::zeros(n, n, n);
        for i in 0..n {
            for j in 0..n {
                let mut e = Polynomial::constant(n, omega.get(i, j).clone());
                for k in 0..n {
                    let ck = c.coeff(i, j, k);
                    if !ck.is_zero() {
                        e = &e + &Polynomial::var(n, k).scale(&ck);
                    }
                }
                p.set(i, j, e);
            }
        }
        ChartModel {
            algebra: c.clone(),
            omega: omega.clone(),
            p,
            names: default_names(n),
            symplectic: OnceLock::new(),
        }
    }

    /// Replaces the chart variable names used for text output.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, ChartError> {
        if names.len() != self.dim() {
            return Err(ChartError::Names {
                count: names.len(),
                dim: self.dim(),
            });
        }
        self.names = names;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &StructureConstants {
        &self.algebra
    }

    pub fn omega(&self) -> &TwoCocycle {
        &self.omega
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// `P(x)`, with `P_ij = {x_i, x_j}`.
    pub fn poisson_matrix(&self) -> &PolyMatrix {
        &self.p
    }

    /// `π⁺ = Σ_{i<j} P_ij ∂_i∧∂_j`.
    pub fn poisson_bivector(&self) -> PolyMultiVector {
        PolyMultiVector::from_matrix(&self.p).expect("P is antisymmetric")
    }

    pub(crate) fn check_len(&self, v: &[Rational]) -> Result<(), ChartError> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(ChartError::VectorLength {
                expected: self.dim(),
                found: v.len(),
            })
        }
    }

    pub(crate) fn symplectic_cache(&self) -> &Result<SymplecticMatrix, ChartError> {
        self.symplectic.get_or_init(|| tensors::compute_symplectic(&self.p))
    }
}
