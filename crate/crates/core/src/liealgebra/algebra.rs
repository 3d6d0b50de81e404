use std::collections::BTreeMap;

use num_traits::Zero;

use super::LieError;
use crate::polycore::{RatMatrix, Rational};

/// A Lie algebra structure on `ℝⁿ`: `[e_i, e_j] = Σ_k C^k_ij e_k`.
///
/// Only pairs `i < j` are stored; `C^k_ji = −C^k_ij` on read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    names: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl StructureConstants {
    /// The abelian algebra with basis names `e1..en`.
    pub fn abelian(dim: usize) -> Self {
        StructureConstants {
            dim,
            names: (1..=dim).map(|i| format!("e{i}")).collect(),
            brackets: BTreeMap::new(),
        }
    }

    /// Builds from `(i, j, [C^1_ij, …, C^n_ij])` with `i < j`, 0-based.
    /// A pair listed twice is an error.
    pub fn from_brackets<I>(dim: usize, brackets: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, Vec<Rational>)>,
    {
        let mut out = Self::abelian(dim);
        for (i, j, coeffs) in brackets {
            if out.brackets.contains_key(&(i, j)) {
                return Err(LieError::Duplicate { i, j });
            }
            out.set_bracket(i, j, coeffs)?;
        }
        Ok(out)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, LieError> {
        if names.len() != self.dim {
            return Err(LieError::Names {
                count: names.len(),
                dim: self.dim,
            });
        }
        self.names = names;
        Ok(self)
    }

    /// Sets (or overwrites) `[e_i, e_j]` for `i < j`.
    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: Vec<Rational>) -> Result<(), LieError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i >= j {
            return Err(LieError::IndexOrder { i, j });
        }
        if coeffs.len() != self.dim {
            return Err(LieError::Dimension {
                expected: self.dim,
                found: coeffs.len(),
            });
        }
        if coeffs.iter().all(Zero::is_zero) {
            self.brackets.remove(&(i, j));
        } else {
            self.brackets.insert((i, j), coeffs);
        }
        Ok(())
    }

    /// Overwrites the single constant `C^k_ij` (either index order).
    pub fn set_coefficient(&mut self, i: usize, j: usize, k: usize, value: Rational) -> Result<(), LieError> {
        self.check_index(k)?;
        let (a, b, v) = if i < j { (i, j, value) } else { (j, i, -value) };
        let mut coeffs = self.bracket_basis(a, b);
        coeffs[k] = v;
        self.set_bracket(a, b, coeffs)
    }

    fn check_index(&self, index: usize) -> Result<(), LieError> {
        if index < self.dim {
            Ok(())
        } else {
            Err(LieError::IndexOutOfRange { index, dim: self.dim })
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Nonzero brackets `(i, j) ↦ coefficients` with `i < j`.
    pub fn brackets(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<Rational>)> {
        self.brackets.iter()
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets.is_empty()
    }

    /// `C^k_ij`.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.brackets.get(&(i, j)).map_or_else(Rational::zero, |c| c[k].clone()),
            std::cmp::Ordering::Greater => -self.coeff(j, i, k),
            std::cmp::Ordering::Equal => Rational::zero(),
        }
    }

    /// Coefficient vector of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        (0..self.dim).map(|k| self.coeff(i, j, k)).collect()
    }

    /// `[u, v]` for coefficient vectors.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (&(i, j), c) in &self.brackets {
            let w = &u[i] * &v[j] - &u[j] * &v[i];
            if w.is_zero() {
                continue;
            }
            for (o, ck) in out.iter_mut().zip(c) {
                *o += &w * ck;
            }
        }
        out
    }

    /// Matrix of `ad e_i`, column `j` holding `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                m.set(k, j, self.coeff(i, j, k));
            }
        }
        m
    }

    /// Applies the change of basis `e'_a = Σ_b g_ba e_b` (columns of `g`
    /// are the new basis vectors). Returns `None` if `g` is singular.
    pub fn change_basis(&self, g: &RatMatrix) -> Option<StructureConstants> {
        let ginv = g.inverse()?;
        let n = self.dim;
        let cols: Vec<Vec<Rational>> = (0..n).map(|a| (0..n).map(|b| g.get(b, a).clone()).collect()).collect();
        let mut out = Self::abelian(n);
        out.names = self.names.clone();
        for a in 0..n {
            for b in a + 1..n {
                let w = self.bracket(&cols[a], &cols[b]);
                out.set_bracket(a, b, ginv.apply(&w)).expect("valid indices");
            }
        }
        Some(out)
    }
}

/// An antisymmetric bilinear form `ω` on the algebra, stored as its Gram
/// matrix `ω_ij = ω(e_i, e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    matrix: RatMatrix,
}

impl TwoCocycle {
    pub fn new(matrix: RatMatrix) -> Result<Self, LieError> {
        if matrix.rows() != matrix.cols() {
            return Err(LieError::Dimension {
                expected: matrix.rows(),
                found: matrix.cols(),
            });
        }
        let n = matrix.rows();
        for i in 0..n {
            for j in i..n {
                if *matrix.get(i, j) != -matrix.get(j, i).clone() {
                    return Err(LieError::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(TwoCocycle { matrix })
    }

    /// Builds from `(i, j, ω_ij)` with `i < j`; a pair listed twice is an
    /// error.
    pub fn from_pairs<I>(dim: usize, pairs: I) -> Result<Self, LieError>
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut m = RatMatrix::zeros(dim, dim);
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, v) in pairs {
            for index in [i, j] {
                if index >= dim {
                    return Err(LieError::IndexOutOfRange { index, dim });
                }
            }
            if i >= j {
                return Err(LieError::IndexOrder { i, j });
            }
            if !seen.insert((i, j)) {
                return Err(LieError::Duplicate { i, j });
            }
            m.set(j, i, -v.clone());
            m.set(i, j, v);
        }
        Ok(TwoCocycle { matrix: m })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        self.matrix.get(i, j)
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// `ω(u, v)`.
    pub fn eval(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mv = self.matrix.apply(v);
        u.iter().zip(&mv).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Gram matrix in the basis given by the columns of `g`: `gᵀ ω g`.
    pub fn change_basis(&self, g: &RatMatrix) -> TwoCocycle {
        TwoCocycle {
            matrix: g.transpose().mul(&self.matrix).mul(g),
        }
    }
}
