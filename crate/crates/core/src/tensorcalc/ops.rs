use super::{PolyForm, PolyMultiVector, PolyTensor, PolyVectorField, TensorError};
use crate::polycore::{PolyError, PolyMatrix, Polynomial};

/// A tensor accepted by [`dualize`] and [`directional_derivative`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tensor {
    Vector(PolyVectorField),
    Multi(PolyMultiVector),
    Form(PolyForm),
}

impl Tensor {
    pub fn nvars(&self) -> usize {
        match self {
            Tensor::Vector(v) => v.nvars(),
            Tensor::Multi(m) => m.nvars(),
            Tensor::Form(f) => f.nvars(),
        }
    }

    pub fn to_text<S: AsRef<str>>(&self, names: &[S]) -> String {
        match self {
            Tensor::Vector(v) => v.to_text(names),
            Tensor::Multi(m) => m.to_text(names),
            Tensor::Form(f) => f.to_text(names),
        }
    }
}

impl PolyTensor for Tensor {
    fn coefficients(&self) -> Vec<&Polynomial> {
        match self {
            Tensor::Vector(v) => v.coefficients(),
            Tensor::Multi(m) => m.coefficients(),
            Tensor::Form(f) => f.coefficients(),
        }
    }
}

fn same_dim(a: usize, b: usize) -> Result<(), TensorError> {
    if a == b {
        Ok(())
    } else {
        Err(PolyError::ArityMismatch { expected: a, found: b }.into())
    }
}

/// `[X, Y]^m = X(Y^m) − Y(X^m)`.
pub fn lie_bracket(x: &PolyVectorField, y: &PolyVectorField) -> Result<PolyVectorField, TensorError> {
    same_dim(x.nvars(), y.nvars())?;
    let comps = (0..x.nvars())
        .map(|m| &x.apply(y.component(m)) - &y.apply(x.component(m)))
        .collect();
    PolyVectorField::new(comps)
}

/// Schouten–Nijenhuis bracket of two bivector fields.
///
/// Normalized so that `[P, P]_{ijk}` is twice the Jacobiator
/// `{x_i,{x_j,x_k}} + cyclic` of the bracket `{f,g} = Σ P_ij ∂_i f ∂_j g`.
pub fn schouten_bracket(p: &PolyMultiVector, q: &PolyMultiVector) -> Result<PolyMultiVector, TensorError> {
    for t in [p, q] {
        if t.arity() != 2 {
            return Err(TensorError::Arity {
                expected: 2,
                found: t.arity(),
            });
        }
    }
    same_dim(p.nvars(), q.nvars())?;
    let n = p.nvars();
    let pm = p.to_matrix()?;
    let qm = q.to_matrix()?;
    // ∂_l of every entry, computed once
    let dp: Vec<PolyMatrix> = (0..n).map(|l| pm.map(|e| e.d(l))).collect();
    let dq: Vec<PolyMatrix> = (0..n).map(|l| qm.map(|e| e.d(l))).collect();
    let mut out = PolyMultiVector::zero(n, 3);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut acc = Polynomial::zero(n);
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for l in 0..n {
                        let t1 = pm.get(a, l);
                        if !t1.is_zero() {
                            acc = &acc + &(t1 * dq[l].get(b, c));
                        }
                        let t2 = qm.get(a, l);
                        if !t2.is_zero() {
                            acc = &acc + &(t2 * dp[l].get(b, c));
                        }
                    }
                }
                out.add_component(&[i, j, k], acc)?;
            }
        }
    }
    Ok(out)
}

/// Exterior derivative `d(f dx_I) = Σ_l ∂_l f dx_l ∧ dx_I`.
pub fn exterior_derivative(f: &PolyForm) -> Result<PolyForm, TensorError> {
    let n = f.nvars();
    if f.arity() >= n {
        return Err(TensorError::ArityOverflow {
            arity: f.arity() + 1,
            nvars: n,
        });
    }
    let mut out = PolyForm::zero(n, f.arity() + 1);
    for (idx, c) in f.components() {
        for l in 0..n {
            if idx.contains(&l) {
                continue;
            }
            let dc = c.d(l);
            if dc.is_zero() {
                continue;
            }
            let key: Vec<usize> = std::iter::once(l).chain(idx.iter().copied()).collect();
            out.add_component(&key, dc)?;
        }
    }
    Ok(out)
}

/// Contraction of `X` into the first slot of `f`.
pub fn interior_product(x: &PolyVectorField, f: &PolyForm) -> Result<PolyForm, TensorError> {
    same_dim(x.nvars(), f.nvars())?;
    if f.arity() == 0 {
        return Err(TensorError::Arity { expected: 1, found: 0 });
    }
    let n = f.nvars();
    let mut out = PolyForm::zero(n, f.arity() - 1);
    for (idx, c) in f.components() {
        for (s, &i) in idx.iter().enumerate() {
            let xi = x.component(i);
            if xi.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().copied().filter(|&k| k != i).collect();
            let term = xi * c;
            out.add_component(&rest, if s % 2 == 1 { -term } else { term })?;
        }
    }
    Ok(out)
}

/// Lie derivative of a form along `X` by Cartan's formula.
pub fn lie_derivative_form(x: &PolyVectorField, f: &PolyForm) -> Result<PolyForm, TensorError> {
    same_dim(x.nvars(), f.nvars())?;
    let n = f.nvars();
    let first = if f.arity() < n {
        interior_product(x, &exterior_derivative(f)?)?
    } else {
        PolyForm::zero(n, f.arity())
    };
    if f.arity() == 0 {
        return Ok(first);
    }
    let second = exterior_derivative(&interior_product(x, f)?)?;
    first.checked_add(&second)
}

/// `π#(α) = π(α, ·)`, i.e. `(π#α)^j = Σ_i α_i P_ij`.
pub fn sharp(alpha: &PolyForm, p: &PolyMultiVector) -> Result<PolyVectorField, TensorError> {
    if alpha.arity() != 1 || p.arity() != 2 {
        return Err(TensorError::Unsupported("sharp needs a 1-form and a bivector".into()));
    }
    same_dim(alpha.nvars(), p.nvars())?;
    let n = p.nvars();
    let a = alpha.to_vector()?;
    let comps = (0..n)
        .map(|j| {
            (0..n).fold(Polynomial::zero(n), |acc, i| {
                if a[i].is_zero() {
                    acc
                } else {
                    &acc + &(&a[i] * &p.get(&[i, j]))
                }
            })
        })
        .collect();
    PolyVectorField::new(comps)
}

fn pair_bivector(alpha: &PolyForm, beta: &PolyForm, p: &PolyMultiVector) -> Result<Polynomial, TensorError> {
    let s = sharp(alpha, p)?;
    let b = beta.to_vector()?;
    Ok(s.components()
        .iter()
        .zip(&b)
        .fold(Polynomial::zero(p.nvars()), |acc, (x, y)| &acc + &(x * y)))
}

/// Koszul bracket `[α, β]_π = L_{π#α} β − L_{π#β} α − d π(α, β)`.
pub fn koszul_bracket(alpha: &PolyForm, beta: &PolyForm, p: &PolyMultiVector) -> Result<PolyForm, TensorError> {
    for f in [alpha, beta] {
        if f.arity() != 1 {
            return Err(TensorError::Arity {
                expected: 1,
                found: f.arity(),
            });
        }
    }
    same_dim(alpha.nvars(), beta.nvars())?;
    let la = lie_derivative_form(&sharp(alpha, p)?, beta)?;
    let lb = lie_derivative_form(&sharp(beta, p)?, alpha)?;
    let d = exterior_derivative(&PolyForm::scalar(pair_bivector(alpha, beta, p)?))?;
    la.checked_sub(&lb)?.checked_sub(&d)
}

/// Coefficient-wise derivative of `t` along `x` (the flat connection of
/// the chart).
pub fn directional_derivative(x: &PolyVectorField, t: &Tensor) -> Result<Tensor, TensorError> {
    same_dim(x.nvars(), t.nvars())?;
    Ok(match t {
        Tensor::Vector(v) => Tensor::Vector(PolyVectorField::new(
            v.components().iter().map(|c| x.apply(c)).collect(),
        )?),
        Tensor::Multi(m) => Tensor::Multi(PolyMultiVector::from_components(
            m.nvars(),
            m.arity(),
            m.components().map(|(k, c)| (k.clone(), x.apply(c))),
        )?),
        Tensor::Form(f) => Tensor::Form(PolyForm::from_components(
            f.nvars(),
            f.arity(),
            f.components().map(|(k, c)| (k.clone(), x.apply(c))),
        )?),
    })
}

/// The musical isomorphism `T ↦ T^ω` given the symplectic matrix `s` and
/// the Poisson matrix `p` with `s·p = I`.
///
/// Vectors go to 1-forms by `X ↦ s·X`, 1-forms to vectors by `α ↦ p·α`,
/// and arity-2 tensors slot-wise (`B ↦ s B sᵀ`, `F ↦ p F pᵀ`). In chart
/// terms this is `X ↦ i_X ω` and `α ↦ −π#(α)` for the form `ω` with
/// matrix `sᵀ`, so `(T^ω)^ω = T`.
pub fn dualize(t: &Tensor, s: &PolyMatrix, p: &PolyMatrix) -> Result<Tensor, TensorError> {
    if !s.checked_mul(p)?.is_identity() {
        return Err(TensorError::NotInverse);
    }
    same_dim(s.rows(), t.nvars())?;
    let vec_to_form = |v: &[Polynomial]| -> Result<PolyForm, TensorError> { PolyForm::from_vector(s.apply(v)?) };
    let form_to_vec = |a: &[Polynomial]| -> Result<PolyVectorField, TensorError> { PolyVectorField::new(p.apply(a)?) };
    match t {
        Tensor::Vector(v) => Ok(Tensor::Form(vec_to_form(v.components())?)),
        Tensor::Multi(m) if m.arity() == 1 => Ok(Tensor::Form(vec_to_form(&m.to_vector()?)?)),
        Tensor::Form(f) if f.arity() == 1 => Ok(Tensor::Vector(form_to_vec(&f.to_vector()?)?)),
        Tensor::Multi(m) if m.arity() == 2 => {
            let b = m.to_matrix()?;
            let out = s.checked_mul(&b)?.checked_mul(&s.transpose())?;
            Ok(Tensor::Form(PolyForm::from_matrix(&out)?))
        }
        Tensor::Form(f) if f.arity() == 2 => {
            let b = f.to_matrix()?;
            let out = p.checked_mul(&b)?.checked_mul(&p.transpose())?;
            Ok(Tensor::Multi(PolyMultiVector::from_matrix(&out)?))
        }
        _ => Err(TensorError::Unsupported(
            "dualization is implemented for arities 1 and 2".into(),
        )),
    }
}
