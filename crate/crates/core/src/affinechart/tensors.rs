use num_traits::{One, Zero};

use super::{ChartError, ChartModel};
use crate::liealgebra::ConstMultiVector;
use crate::polycore::rational::factorial;
use crate::polycore::{PolyMatrix, Polynomial, Rational};
use crate::tensorcalc::{dualize, lie_bracket, PolyForm, PolyMultiVector, PolyTensor, PolyVectorField, Tensor};

/// The inverse of `P(x)`: polynomial when `det P` is a nonzero constant,
/// otherwise kept as adjugate over determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymplecticMatrix {
    Polynomial { s: PolyMatrix, det: Rational },
    NonPolynomial { adjugate: PolyMatrix, det: Polynomial },
}

impl SymplecticMatrix {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, SymplecticMatrix::Polynomial { .. })
    }

    pub fn polynomial(&self) -> Option<&PolyMatrix> {
        match self {
            SymplecticMatrix::Polynomial { s, .. } => Some(s),
            SymplecticMatrix::NonPolynomial { .. } => None,
        }
    }
}

pub(super) fn compute_symplectic(p: &PolyMatrix) -> Result<SymplecticMatrix, ChartError> {
    let det = p.det()?;
    if det.is_zero() {
        return Err(ChartError::Degenerate);
    }
    if det.is_constant() {
        if let Some(s) = neumann_inverse(p)? {
            return Ok(SymplecticMatrix::Polynomial {
                s,
                det: det.constant_term(),
            });
        }
    }
    let (det, adj) = p.det_adjugate()?;
    if det.is_constant() {
        let d = det.constant_term();
        let s = adj.scale(&(Rational::one() / &d));
        Ok(SymplecticMatrix::Polynomial { s, det: d })
    } else {
        Ok(SymplecticMatrix::NonPolynomial { adjugate: adj, det })
    }
}

/// With `P = ω(I + N)` and `det P` constant, `det(I + tN(x)) = 1` for all
/// `t`, so `N(x)` is nilpotent and `P⁻¹ = Σ_{k<n} (−N)^k ω⁻¹` is a finite
/// sum. Much cheaper than cofactors; verified by `S·P = I`.
fn neumann_inverse(p: &PolyMatrix) -> Result<Option<PolyMatrix>, ChartError> {
    let n = p.rows();
    let Some(w_inv) = p.constant_part().inverse() else {
        return Ok(None);
    };
    let w_inv = PolyMatrix::from_rational(&w_inv, p.nvars());
    let neg_n = w_inv
        .checked_mul(&p.checked_add(&PolyMatrix::from_rational(&p.constant_part(), p.nvars()).neg())?)?
        .neg();
    let mut term = w_inv.clone();
    let mut sum = w_inv.clone();
    for _ in 1..n {
        term = neg_n.checked_mul(&term)?;
        if term.is_zero() {
            break;
        }
        sum = sum.checked_add(&term)?;
    }
    Ok(sum.checked_mul(p)?.is_identity().then_some(sum))
}

/// `S(x) = P(x)⁻¹`, or the non-unimodular marker with adjugate and
/// determinant.
pub fn symplectic_matrix(m: &ChartModel) -> Result<SymplecticMatrix, ChartError> {
    m.symplectic_cache().clone()
}

/// The polynomial `S`, or the non-unimodular error.
pub(crate) fn polynomial_s(m: &ChartModel) -> Result<&PolyMatrix, ChartError> {
    match m.symplectic_cache() {
        Ok(SymplecticMatrix::Polynomial { s, .. }) => Ok(s),
        Ok(SymplecticMatrix::NonPolynomial { det, .. }) => Err(ChartError::NonUnimodular {
            det: det.to_text(m.names()),
        }),
        Err(e) => Err(e.clone()),
    }
}

/// `Σ_{i<j} S_ij dx_i∧dx_j`.
pub fn symplectic_form(m: &ChartModel) -> Result<PolyForm, ChartError> {
    Ok(PolyForm::from_matrix(polynomial_s(m)?)?)
}

/// The top power `∧^{n/2}` of [`symplectic_form`].
pub fn volume_form(m: &ChartModel) -> Result<PolyForm, ChartError> {
    if m.dim() % 2 == 1 {
        return Err(ChartError::OddDimension(m.dim()));
    }
    Ok(symplectic_form(m)?.wedge_power(m.dim() / 2)?)
}

/// `u⁻ = Σ_j (P u)_j ∂_j`; for a basis vector this is a column of `P`.
pub fn right_invariant_field(m: &ChartModel, u: &[Rational]) -> Result<PolyVectorField, ChartError> {
    m.check_len(u)?;
    let n = m.dim();
    let comps = (0..n)
        .map(|j| {
            u.iter().enumerate().fold(Polynomial::zero(n), |acc, (i, c)| {
                if c.is_zero() {
                    acc
                } else {
                    &acc + &m.poisson_matrix().get(j, i).scale(c)
                }
            })
        })
        .collect();
    Ok(PolyVectorField::new(comps)?)
}

/// `α⁻ = Σ_i α_i (row i of S)`, the right-invariant 1-form of the covector
/// `α` on the algebra.
pub fn right_invariant_form(m: &ChartModel, alpha: &[Rational]) -> Result<PolyForm, ChartError> {
    m.check_len(alpha)?;
    let s = polynomial_s(m)?;
    let n = m.dim();
    let comps = (0..n)
        .map(|j| {
            alpha.iter().enumerate().fold(Polynomial::zero(n), |acc, (i, c)| {
                if c.is_zero() {
                    acc
                } else {
                    &acc + &s.get(i, j).scale(c)
                }
            })
        })
        .collect();
    Ok(PolyForm::from_vector(comps)?)
}

/// Extends `u ↦ u⁻` to constant multivectors, linearly and through wedges.
pub fn right_multivector(m: &ChartModel, w: &ConstMultiVector) -> Result<PolyMultiVector, ChartError> {
    extend_multivector(m, w, |e| {
        let mut v = vec![Rational::zero(); m.dim()];
        v[e] = Rational::one();
        right_invariant_field(m, &v)
    })
}

pub(crate) fn extend_multivector<F>(
    m: &ChartModel,
    w: &ConstMultiVector,
    mut field: F,
) -> Result<PolyMultiVector, ChartError>
where
    F: FnMut(usize) -> Result<PolyVectorField, ChartError>,
{
    let n = m.dim();
    m.check_len(&vec![Rational::zero(); w.dim()])?;
    if w.arity() == 0 || w.arity() > n {
        return Err(crate::tensorcalc::TensorError::ArityOverflow {
            arity: w.arity(),
            nvars: n,
        }
        .into());
    }
    let fields: Vec<PolyMultiVector> = (0..n)
        .map(|e| field(e).map(|f| f.to_multivector()))
        .collect::<Result<_, _>>()?;
    let mut out = PolyMultiVector::zero(n, w.arity());
    for (idx, c) in w.components() {
        let mut term = fields[idx[0]].clone();
        for &i in &idx[1..] {
            term = term.wedge(&fields[i])?;
        }
        out = out.checked_add(&term.scale(c))?;
    }
    Ok(out)
}

/// `{f, g} = Σ_{i,j} P_ij ∂_i f ∂_j g`.
pub fn poisson_bracket(m: &ChartModel, f: &Polynomial, g: &Polynomial) -> Result<Polynomial, ChartError> {
    let n = m.dim();
    for q in [f, g] {
        if q.nvars() != n {
            return Err(crate::polycore::PolyError::ArityMismatch {
                expected: n,
                found: q.nvars(),
            }
            .into());
        }
    }
    let df: Vec<Polynomial> = (0..n).map(|i| f.d(i)).collect();
    let dg: Vec<Polynomial> = (0..n).map(|j| g.d(j)).collect();
    let p = m.poisson_matrix();
    let mut acc = Polynomial::zero(n);
    for (i, fi) in df.iter().enumerate() {
        if fi.is_zero() {
            continue;
        }
        for (j, gj) in dg.iter().enumerate() {
            if gj.is_zero() || p.get(i, j).is_zero() {
                continue;
            }
            acc = &acc + &(&(p.get(i, j) * fi) * gj);
        }
    }
    Ok(acc)
}

/// Result of [`volume_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeReport {
    pub det: Polynomial,
    /// `det P` is constant.
    pub parallel: bool,
    /// Coefficient of `dx_1∧…∧dx_n` in `∧^{n/2}` of the adjugate 2-form.
    pub adjugate_top: Polynomial,
    /// `∧^{n/2}` of the symplectic form has constant coefficients
    /// (computed from `adjugate_top / det^{n/2}`).
    pub wedge_parallel: bool,
    /// `((n/2)!)² det^{n−1} = adjugate_top²`, the Pfaffian relation between
    /// the determinant and the top wedge power.
    pub pfaffian_identity: bool,
}

impl VolumeReport {
    /// Both parallelism computations agree.
    pub fn consistent(&self) -> bool {
        self.parallel == self.wedge_parallel
    }
}

/// Determinant of `P` and parallelism of `∧^{n/2} ω⁺`, computed two ways.
pub fn volume_check(m: &ChartModel) -> Result<VolumeReport, ChartError> {
    let n = m.dim();
    if n % 2 == 1 {
        return Err(ChartError::OddDimension(n));
    }
    let half = n / 2;
    let (det, adj) = match m.symplectic_cache() {
        Ok(SymplecticMatrix::Polynomial { s, det }) => (Polynomial::constant(n, det.clone()), s.scale(det)),
        Ok(SymplecticMatrix::NonPolynomial { adjugate, det }) => (det.clone(), adjugate.clone()),
        Err(e) => return Err(e.clone()),
    };
    let adj_form = PolyForm::from_matrix(&adj)?;
    let top_index: Vec<usize> = (0..n).collect();
    let adjugate_top = if n == 0 {
        Polynomial::one(0)
    } else {
        adj_form.wedge_power(half)?.get(&top_index)
    };
    let zero = vec![Rational::zero(); n];
    let det0 = Polynomial::constant(n, det.eval(&zero)?);
    let top0 = Polynomial::constant(n, adjugate_top.eval(&zero)?);
    let wedge_parallel = &adjugate_top * &det0.pow(half as u32) == &top0 * &det.pow(half as u32);
    let mf = factorial(half);
    let pfaffian_identity = det.pow((n.max(1) - 1) as u32).scale(&(&mf * &mf)) == adjugate_top.pow(2);
    Ok(VolumeReport {
        parallel: det.is_constant(),
        det,
        adjugate_top,
        wedge_parallel,
        pfaffian_identity,
    })
}

/// Parallel for the flat chart connection: every coefficient constant.
pub fn is_parallel<T: PolyTensor + ?Sized>(t: &T) -> bool {
    t.max_degree() <= 0
}

/// The sharps `π#(α_i⁻)` of the right-invariant coframe; checks that they
/// are constant and pairwise commute, returning them on success.
pub fn commuting_frame_check(m: &ChartModel) -> Result<Vec<PolyVectorField>, ChartError> {
    let n = m.dim();
    let s = polynomial_s(m)?;
    let mut fields = Vec::with_capacity(n);
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        let alpha = right_invariant_form(m, &e)?;
        let field = match dualize(&Tensor::Form(alpha), s, m.poisson_matrix())? {
            Tensor::Vector(v) => v.scale(&-Rational::one()),
            _ => unreachable!("1-forms dualize to vector fields"),
        };
        if !is_parallel(&field) {
            return Err(ChartError::FrameNotConstant { index: i });
        }
        fields.push(field);
    }
    for i in 0..n {
        for j in i + 1..n {
            if !lie_bracket(&fields[i], &fields[j])?.is_zero() {
                return Err(ChartError::FrameNotCommuting { i, j });
            }
        }
    }
    Ok(fields)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affinechart::build_chart;
    use crate::liealgebra::{StructureConstants, TwoCocycle};
    use crate::polycore::rat;

    fn aff2() -> ChartModel {
        let c = StructureConstants::from_brackets(2, [(0, 1, vec![rat(0), rat(1)])]).unwrap();
        let w = TwoCocycle::from_pairs(2, [(0, 1, rat(1))]).unwrap();
        build_chart(&c, &w).unwrap()
    }

    fn darboux4() -> ChartModel {
        let c = StructureConstants::abelian(4);
        let w = TwoCocycle::from_pairs(4, [(0, 1, rat(1)), (2, 3, rat(1))]).unwrap();
        build_chart(&c, &w).unwrap()
    }

    #[test]
    fn non_unimodular_marker() {
        let m = aff2();
        match symplectic_matrix(&m).unwrap() {
            SymplecticMatrix::NonPolynomial { det, .. } => assert_eq!(det.to_text(m.names()), "x2^2 + 2*x2 + 1"),
            other => panic!("expected marker, got {other:?}"),
        }
        assert!(matches!(symplectic_form(&m), Err(ChartError::NonUnimodular { .. })));
        let v = volume_check(&m).unwrap();
        assert!(!v.parallel && !v.wedge_parallel && v.pfaffian_identity);
    }

    #[test]
    fn abelian_is_constant() {
        let m = darboux4();
        let s = symplectic_matrix(&m).unwrap();
        assert!(s.is_polynomial());
        assert!(is_parallel(&symplectic_form(&m).unwrap()));
        assert_eq!(symplectic_form(&m).unwrap().to_text(m.names()), "-dx1^dx2 - dx3^dx4");
        let f = right_invariant_field(&m, &[rat(1), rat(2), rat(3), rat(4)]).unwrap();
        assert!(is_parallel(&f));
        let v = volume_check(&m).unwrap();
        assert!(v.parallel && v.wedge_parallel && v.pfaffian_identity);
        assert_eq!(commuting_frame_check(&m).unwrap().len(), 4);
    }

    #[test]
    fn bracket_of_coordinates() {
        let m = aff2();
        let x = |k| Polynomial::var(2, k);
        assert_eq!(
            poisson_bracket(&m, &x(0), &x(1)).unwrap(),
            m.poisson_matrix().get(0, 1).clone()
        );
        assert!(poisson_bracket(&m, &x(0), &Polynomial::constant(2, rat(5)))
            .unwrap()
            .is_zero());
        assert!(right_invariant_field(&m, &[rat(1)]).is_err());
    }
}
