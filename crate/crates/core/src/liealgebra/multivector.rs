use std::collections::BTreeMap;

use num_traits::Zero;

use super::checks::check_nondegenerate;
use super::{LieError, StructureConstants, TwoCocycle, Violation};
use crate::polycore::{format_rational, RatMatrix, Rational};
use crate::tensorcalc::sort_with_sign;

/// A constant `k`-vector on the algebra, `Σ_{i₁<…<i_k} w^I e_{i₁}∧…∧e_{i_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstMultiVector {
    dim: usize,
    arity: usize,
    comps: BTreeMap<Vec<usize>, Rational>,
}

impl ConstMultiVector {
    pub fn zero(dim: usize, arity: usize) -> Self {
        ConstMultiVector {
            dim,
            arity,
            comps: BTreeMap::new(),
        }
    }

    pub fn from_vector(v: &[Rational]) -> Self {
        let mut out = Self::zero(v.len(), 1);
        for (i, c) in v.iter().enumerate() {
            out.add_component(&[i], c.clone()).expect("in range");
        }
        out
    }

    /// `e_{i₁}∧…∧e_{i_k}` for arbitrary (possibly unsorted) indices.
    pub fn basis(dim: usize, indices: &[usize]) -> Result<Self, LieError> {
        let mut out = Self::zero(dim, indices.len());
        out.add_component(indices, Rational::from_integer(1.into()))?;
        Ok(out)
    }

    /// Adds `c · e_{idx}`; repeated indices contribute nothing.
    pub fn add_component(&mut self, idx: &[usize], c: Rational) -> Result<(), LieError> {
        if idx.len() != self.arity {
            return Err(LieError::Arity {
                arity: idx.len(),
                dim: self.dim,
            });
        }
        if let Some(&index) = idx.iter().find(|&&i| i >= self.dim) {
            return Err(LieError::IndexOutOfRange { index, dim: self.dim });
        }
        let mut key = idx.to_vec();
        let Some(sign) = sort_with_sign(&mut key) else {
            return Ok(());
        };
        let c = if sign < 0 { -c } else { c };
        let slot = self.comps.entry(key.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.comps.remove(&key);
        }
        Ok(())
    }

    /// Antisymmetric matrix `m` read as `Σ_{a<b} m_ab e_a∧e_b`.
    pub fn from_matrix(m: &RatMatrix) -> Result<Self, LieError> {
        let n = m.rows();
        if !m.is_antisymmetric() {
            return Err(LieError::Arity { arity: 2, dim: n });
        }
        let mut out = Self::zero(n, 2);
        for a in 0..n {
            for b in a + 1..n {
                out.add_component(&[a, b], m.get(a, b).clone())?;
            }
        }
        Ok(out)
    }

    pub fn to_matrix(&self) -> Option<RatMatrix> {
        if self.arity != 2 {
            return None;
        }
        let mut m = RatMatrix::zeros(self.dim, self.dim);
        for (k, v) in &self.comps {
            m.set(k[0], k[1], v.clone());
            m.set(k[1], k[0], -v.clone());
        }
        Some(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Sign-aware component lookup.
    pub fn get(&self, idx: &[usize]) -> Rational {
        let mut key = idx.to_vec();
        match sort_with_sign(&mut key) {
            Some(sign) => {
                let v = self.comps.get(&key).cloned().unwrap_or_else(Rational::zero);
                if sign < 0 {
                    -v
                } else {
                    v
                }
            }
            None => Rational::zero(),
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.comps.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.dim, self.arity);
        for (k, v) in &self.comps {
            out.add_component(k, v * c).expect("same shape");
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LieError> {
        if self.dim != other.dim || self.arity != other.arity {
            return Err(LieError::Dimension {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.comps {
            out.add_component(k, v.clone())?;
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &Self) -> Result<Self, LieError> {
        let arity = self.arity + other.arity;
        if self.dim != other.dim || arity > self.dim {
            return Err(LieError::Arity { arity, dim: self.dim });
        }
        let mut out = Self::zero(self.dim, arity);
        for (a, x) in &self.comps {
            for (b, y) in &other.comps {
                let idx: Vec<usize> = a.iter().chain(b).copied().collect();
                out.add_component(&idx, x * y)?;
            }
        }
        Ok(out)
    }

    /// Text such as `2*e1^e2 - 1/3*e3^e4`.
    pub fn to_text<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.comps.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (k, v)) in self.comps.iter().enumerate() {
            let neg = v < &Rational::zero();
            match (n, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = if neg { -v.clone() } else { v.clone() };
            if abs != Rational::from_integer(1.into()) {
                out.push_str(&format_rational(&abs));
                out.push('*');
            }
            let basis: Vec<&str> = k.iter().map(|&i| names[i].as_ref()).collect();
            out.push_str(&basis.join("^"));
        }
        out
    }
}

/// The constant bivector `r` whose left-invariant extension is the Poisson
/// tensor inverse to `ω⁺`: its matrix is `−ω⁻¹`.
pub fn yang_baxter_r(omega: &TwoCocycle) -> Result<ConstMultiVector, LieError> {
    check_nondegenerate(omega)?;
    let inv = omega.matrix().inverse().expect("non-degenerate");
    ConstMultiVector::from_matrix(&inv.neg())
}

/// The algebraic bracket `[r, r] ∈ Λ³g`:
/// `Σ_{a,b} (r^{ia} r^{jb} C^k_ab + r^{ja} r^{kb} C^i_ab + r^{ka} r^{ib} C^j_ab)`.
pub fn cybe_tensor(r: &ConstMultiVector, c: &StructureConstants) -> Result<ConstMultiVector, LieError> {
    let n = c.dim();
    let m = r.to_matrix().ok_or(LieError::Arity {
        arity: r.arity(),
        dim: n,
    })?;
    if m.rows() != n {
        return Err(LieError::Dimension {
            expected: n,
            found: m.rows(),
        });
    }
    let pairs: Vec<((usize, usize), &Vec<Rational>)> = c.brackets().map(|(k, v)| (*k, v)).collect();
    // Σ_{a,b} r^{xa} r^{yb} C^z_ab over the stored a < b
    let part = |x: usize, y: usize, z: usize| -> Rational {
        pairs.iter().fold(Rational::zero(), |acc, ((a, b), cz)| {
            let w = m.get(x, *a) * m.get(y, *b) - m.get(x, *b) * m.get(y, *a);
            acc + w * &cz[z]
        })
    };
    let mut out = ConstMultiVector::zero(n, 3);
    if n < 3 {
        return Ok(out);
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.add_component(&[i, j, k], part(i, j, k) + part(j, k, i) + part(k, i, j))?;
            }
        }
    }
    Ok(out)
}

/// Passes iff the algebraic `[r, r]` vanishes; the witness is its first
/// nonzero component.
pub fn check_cybe(r: &ConstMultiVector, c: &StructureConstants) -> Result<(), Violation> {
    let t = match cybe_tensor(r, c) {
        Ok(t) => t,
        Err(_) => {
            return Err(Violation::DimensionMismatch {
                algebra: c.dim(),
                cocycle: r.dim(),
            })
        }
    };
    let first = t.components().next().map(|(k, v)| Violation::Cybe {
        i: k[0],
        j: k[1],
        k: k[2],
        value: v.clone(),
    });
    first.map_or(Ok(()), Err)
}
