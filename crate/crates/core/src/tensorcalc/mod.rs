//! Polynomial-coefficient vector fields, multivector fields and
//! differential forms on chart space.
//!
//! Multivectors and forms are stored sparsely on strictly increasing index
//! tuples; antisymmetry holds by construction.

mod ops;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::polycore::{default_names, PolyError, PolyMatrix, Polynomial, Rational};

pub use ops::{
    directional_derivative, dualize, exterior_derivative, interior_product, koszul_bracket, lie_bracket,
    lie_derivative_form, schouten_bracket, sharp, Tensor,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("expected arity {expected}, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("arity {arity} exceeds dimension {nvars}")]
    ArityOverflow { arity: usize, nvars: usize },
    #[error("index {index} out of range for dimension {nvars}")]
    Index { index: usize, nvars: usize },
    #[error("symplectic and Poisson matrices are not mutually inverse")]
    NotInverse,
    #[error("unsupported tensor for this operation: {0}")]
    Unsupported(String),
    #[error("malformed tensor text '{text}': {message}")]
    Parse { text: String, message: String },
}

/// Marker for the slot type of an alternating tensor.
pub trait Slot: Clone + fmt::Debug + PartialEq + Eq {
    /// Basis symbol prefix, `∂` for vectors and `d` for covectors.
    const SYMBOL: &'static str;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vectors;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covectors;

impl Slot for Vectors {
    const SYMBOL: &'static str = "∂";
}

impl Slot for Covectors {
    const SYMBOL: &'static str = "d";
}

/// Alternating tensor field of fixed arity with polynomial coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alternating<K: Slot> {
    nvars: usize,
    arity: usize,
    comps: BTreeMap<Vec<usize>, Polynomial>,
    _slot: PhantomData<K>,
}

pub type PolyMultiVector = Alternating<Vectors>;
pub type PolyForm = Alternating<Covectors>;

/// Sorts `idx` in place, returning the permutation sign, or `None` if an
/// index repeats.
pub(crate) fn sort_with_sign(idx: &mut [usize]) -> Option<i32> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

impl<K: Slot> Alternating<K> {
    pub fn zero(nvars: usize, arity: usize) -> Self {
        Alternating {
            nvars,
            arity,
            comps: BTreeMap::new(),
            _slot: PhantomData,
        }
    }

    /// Degree-0 tensor (a function).
    pub fn scalar(f: Polynomial) -> Self {
        let mut t = Self::zero(f.nvars(), 0);
        t.add_component(&[], f).expect("empty tuple is valid");
        t
    }

    /// Builds a tensor from components on arbitrary (possibly unordered)
    /// index tuples; reordering applies the permutation sign and tuples with
    /// a repeated index contribute nothing.
    pub fn from_components<I>(nvars: usize, arity: usize, comps: I) -> Result<Self, TensorError>
    where
        I: IntoIterator<Item = (Vec<usize>, Polynomial)>,
    {
        if arity > nvars {
            return Err(TensorError::ArityOverflow { arity, nvars });
        }
        let mut t = Self::zero(nvars, arity);
        for (idx, p) in comps {
            t.add_component(&idx, p)?;
        }
        Ok(t)
    }

    /// Adds `p` to the component on `idx` (any order).
    pub fn add_component(&mut self, idx: &[usize], p: Polynomial) -> Result<(), TensorError> {
        if idx.len() != self.arity {
            return Err(TensorError::Arity {
                expected: self.arity,
                found: idx.len(),
            });
        }
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.nvars) {
            return Err(TensorError::Index {
                index: bad,
                nvars: self.nvars,
            });
        }
        if p.nvars() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: p.nvars(),
            }
            .into());
        }
        let mut key = idx.to_vec();
        let Some(sign) = sort_with_sign(&mut key) else {
            return Ok(());
        };
        let p = if sign < 0 { -p } else { p };
        let sum = match self.comps.remove(&key) {
            Some(old) => &old + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.comps.insert(key, sum);
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Component on an arbitrary index tuple, with the alternating sign.
    pub fn get(&self, idx: &[usize]) -> Polynomial {
        let mut key = idx.to_vec();
        match sort_with_sign(&mut key) {
            Some(sign) => match self.comps.get(&key) {
                Some(p) if sign < 0 => -p,
                Some(p) => p.clone(),
                None => Polynomial::zero(self.nvars),
            },
            None => Polynomial::zero(self.nvars),
        }
    }

    /// Nonzero components on strictly increasing tuples.
    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Maximum coefficient degree (−1 for the zero tensor).
    pub fn degree(&self) -> i64 {
        self.comps.values().map(Polynomial::degree).max().unwrap_or(-1)
    }

    fn check_compatible(&self, other: &Self) -> Result<(), TensorError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            }
            .into());
        }
        if self.arity != other.arity {
            return Err(TensorError::Arity {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, TensorError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, p) in &other.comps {
            out.add_component(k, p.clone())?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.checked_add(&other.scale_poly(&-Polynomial::one(self.nvars)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    pub fn scale_poly(&self, f: &Polynomial) -> Self {
        self.map(|p| p * f)
    }

    pub fn neg(&self) -> Self {
        self.map(|p| -p)
    }

    fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Alternating {
            nvars: self.nvars,
            arity: self.arity,
            comps: self
                .comps
                .iter()
                .map(|(k, p)| (k.clone(), f(p)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
            _slot: PhantomData,
        }
    }

    /// Exterior product, graded antisymmetric.
    pub fn wedge(&self, other: &Self) -> Result<Self, TensorError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            }
            .into());
        }
        let arity = self.arity + other.arity;
        if arity > self.nvars {
            return Err(TensorError::ArityOverflow {
                arity,
                nvars: self.nvars,
            });
        }
        let mut out = Self::zero(self.nvars, arity);
        for (a, pa) in &self.comps {
            for (b, pb) in &other.comps {
                let idx: Vec<usize> = a.iter().chain(b).copied().collect();
                out.add_component(&idx, pa * pb)?;
            }
        }
        Ok(out)
    }

    /// `k`-fold exterior power.
    pub fn wedge_power(&self, k: usize) -> Result<Self, TensorError> {
        let mut acc = Self::scalar(Polynomial::one(self.nvars));
        for _ in 0..k {
            acc = acc.wedge(self)?;
        }
        Ok(acc)
    }

    /// Arity-2 tensor from an antisymmetric matrix (upper triangle read).
    pub fn from_matrix(m: &PolyMatrix) -> Result<Self, TensorError> {
        if !m.is_antisymmetric() {
            return Err(TensorError::Unsupported("matrix is not antisymmetric".into()));
        }
        let n = m.rows();
        let comps = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (vec![i, j], m.get(i, j).clone()));
        Self::from_components(m.nvars(), 2, comps)
    }

    /// Full antisymmetric coefficient matrix of an arity-2 tensor.
    pub fn to_matrix(&self) -> Result<PolyMatrix, TensorError> {
        if self.arity != 2 {
            return Err(TensorError::Arity {
                expected: 2,
                found: self.arity,
            });
        }
        let n = self.nvars;
        let mut m = PolyMatrix::zeros(n, n, n);
        for (k, p) in &self.comps {
            m.set(k[0], k[1], p.clone());
            m.set(k[1], k[0], -p);
        }
        Ok(m)
    }

    /// Dense component vector of an arity-1 tensor.
    pub fn to_vector(&self) -> Result<Vec<Polynomial>, TensorError> {
        if self.arity != 1 {
            return Err(TensorError::Arity {
                expected: 1,
                found: self.arity,
            });
        }
        Ok((0..self.nvars).map(|i| self.get(&[i])).collect())
    }

    pub fn from_vector(comps: Vec<Polynomial>) -> Result<Self, TensorError> {
        let n = comps.len();
        Self::from_components(n, 1, comps.into_iter().enumerate().map(|(i, p)| (vec![i], p)))
    }

    /// Canonical text, e.g. `-dX^dY + Z*dX^dZ` or `∂X^∂Y - Y*∂X^∂T`.
    pub fn to_text<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (idx, p)) in self.comps.iter().enumerate() {
            let basis = idx
                .iter()
                .map(|&i| format!("{}{}", K::SYMBOL, names[i].as_ref()))
                .collect::<Vec<_>>()
                .join("^");
            let single = p.num_terms() == 1;
            let (_, c) = p.terms().next().expect("nonzero component");
            let neg = single && c.is_negative();
            match (n, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let coeff = if single {
                let abs = if neg { -p } else { p.clone() };
                if abs.is_constant() && abs.constant_term().is_one() {
                    String::new()
                } else {
                    format!("{}*", abs.to_text(names))
                }
            } else {
                format!("({})*", p.to_text(names))
            };
            if basis.is_empty() {
                out.push_str(coeff.trim_end_matches('*'));
                if coeff.is_empty() {
                    out.push('1');
                }
            } else {
                out.push_str(&coeff);
                out.push_str(&basis);
            }
        }
        out
    }
}

impl<K: Slot> fmt::Display for Alternating<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&default_names(self.nvars)))
    }
}

impl PolyForm {
    /// The coordinate 1-form `dx_i`.
    pub fn coordinate(nvars: usize, i: usize) -> Self {
        Self::from_components(nvars, 1, [(vec![i], Polynomial::one(nvars))]).expect("coordinate index in range")
    }
}

/// Vector field `Σ X^i ∂_i` with polynomial components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVectorField {
    comps: Vec<Polynomial>,
}

impl PolyVectorField {
    pub fn new(comps: Vec<Polynomial>) -> Result<Self, TensorError> {
        let n = comps.len();
        if let Some(p) = comps.iter().find(|p| p.nvars() != n) {
            return Err(PolyError::ArityMismatch {
                expected: n,
                found: p.nvars(),
            }
            .into());
        }
        Ok(PolyVectorField { comps })
    }

    pub fn zero(n: usize) -> Self {
        PolyVectorField {
            comps: vec![Polynomial::zero(n); n],
        }
    }

    /// Coordinate field `∂_i`.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut f = Self::zero(n);
        f.comps[i] = Polynomial::one(n);
        f
    }

    pub fn nvars(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.comps[i]
    }

    pub fn degree(&self) -> i64 {
        self.comps.iter().map(Polynomial::degree).max().unwrap_or(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, TensorError> {
        if self.nvars() != other.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            }
            .into());
        }
        Ok(PolyVectorField {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, TensorError> {
        self.checked_add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolyVectorField {
            comps: self.comps.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `X(f) = Σ X^i ∂_i f`.
    pub fn apply(&self, f: &Polynomial) -> Polynomial {
        self.comps
            .iter()
            .enumerate()
            .fold(Polynomial::zero(self.nvars()), |acc, (i, x)| {
                if x.is_zero() {
                    acc
                } else {
                    &acc + &(x * &f.d(i))
                }
            })
    }

    pub fn to_multivector(&self) -> PolyMultiVector {
        PolyMultiVector::from_vector(self.comps.clone()).expect("components share dimension")
    }

    pub fn from_multivector(m: &PolyMultiVector) -> Result<Self, TensorError> {
        Ok(PolyVectorField { comps: m.to_vector()? })
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>, TensorError> {
        Ok(self.comps.iter().map(|p| p.eval(point)).collect::<Result<_, _>>()?)
    }

    pub fn to_text<S: AsRef<str>>(&self, names: &[S]) -> String {
        self.to_multivector().to_text(names)
    }
}

impl fmt::Display for PolyVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&default_names(self.nvars())))
    }
}

/// Anything with polynomial coefficients in the chart.
pub trait PolyTensor {
    fn coefficients(&self) -> Vec<&Polynomial>;

    /// Maximum coefficient degree, −1 when every coefficient vanishes.
    fn max_degree(&self) -> i64 {
        self.coefficients()
            .into_iter()
            .map(Polynomial::degree)
            .max()
            .unwrap_or(-1)
    }
}

impl PolyTensor for Polynomial {
    fn coefficients(&self) -> Vec<&Polynomial> {
        vec![self]
    }
}

impl PolyTensor for PolyVectorField {
    fn coefficients(&self) -> Vec<&Polynomial> {
        self.comps.iter().collect()
    }
}

impl<K: Slot> PolyTensor for Alternating<K> {
    fn coefficients(&self) -> Vec<&Polynomial> {
        self.comps.values().collect()
    }
}

impl PolyTensor for PolyMatrix {
    fn coefficients(&self) -> Vec<&Polynomial> {
        self.entries().collect()
    }
}
