//! Left-invariant polynomial tensors on nilpotent symplectic Lie groups.
//!
//! A left-invariant field `u⁺ = Σ_m f_m ∂_m` commutes with every
//! right-invariant field. In the chart this is the first-order system
//! `u_j⁻(f_m) = Σ_k C^k_mj f_k` with `f(0) = ω·u`. Writing `P = ω + L(x)`
//! and splitting `f` into homogeneous parts, the degree-`(d+1)` gradient is
//! fixed by degree-`d` data through the constant matrix `ω`; Euler's
//! identity then recovers the part itself. The iteration stops once the
//! residual vanishes, which happens by the nilindex for nilpotent algebras.

use num_traits::{One, Zero};

use crate::affinechart::{extend_multivector, polynomial_s, right_multivector, ChartError, ChartModel};
use crate::liealgebra::{lower_central_series, ConstMultiVector, Violation};
use crate::polycore::{PolyMatrix, Polynomial, RatMatrix, Rational};
use crate::tensorcalc::{
    directional_derivative, dualize, lie_bracket, lie_derivative_form, PolyMultiVector, PolyVectorField, Tensor,
};

/// A solved left-invariant field `u⁺ = Σ_j f_j ∂_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftFieldSolution {
    pub u: Vec<Rational>,
    pub field: PolyVectorField,
    /// Highest homogeneous degree present in the coefficients.
    pub achieved_degree: usize,
}

fn nilindex(m: &ChartModel) -> Result<usize, ChartError> {
    let s = lower_central_series(m.algebra());
    s.length().ok_or_else(|| {
        ChartError::NotNilpotent(Violation::NotNilpotent {
            stable_dim: *s.dims().last().expect("nonempty"),
            step: s.terms.len() - 2,
        })
    })
}

/// Solves for the left-invariant field of `u`. Refuses non-nilpotent
/// algebras.
pub fn left_invariant_field(m: &ChartModel, u: &[Rational]) -> Result<LeftFieldSolution, ChartError> {
    m.check_len(u)?;
    let cap = nilindex(m)?;
    let n = m.dim();
    let c = m.algebra();
    let omega = m.omega().matrix();
    // gradient = ω^{-T} · residual
    let solve = omega.transpose().inverse().ok_or(ChartError::Degenerate)?;
    let p = m.poisson_matrix();
    let linear = p.checked_add(&PolyMatrix::from_rational(omega, n).neg())?;

    let f0 = omega.apply(u);
    let mut part: Vec<Polynomial> = f0.iter().map(|v| Polynomial::constant(n, v.clone())).collect();
    let mut total = part.clone();
    let mut achieved = 0;
    for d in 0.. {
        let residual = residual(c, &linear, &part, n);
        if residual.iter().all(|row| row.iter().all(Polynomial::is_zero)) {
            break;
        }
        if d + 1 > cap {
            return Err(ChartError::DegreeCap { cap });
        }
        let next = next_part(&solve, &residual, n, d)?;
        for (t, q) in total.iter_mut().zip(&next) {
            *t = &*t + q;
        }
        part = next;
        if part.iter().any(|q| !q.is_zero()) {
            achieved = d + 1;
        }
    }
    if total.iter().all(Polynomial::is_zero) {
        achieved = 0;
    }
    Ok(LeftFieldSolution {
        u: u.to_vec(),
        field: PolyVectorField::new(total)?,
        achieved_degree: achieved,
    })
}

/// `R_mj = Σ_k C^k_mj f_k − Σ_l L_lj ∂_l f_m`, homogeneous of the degree of
/// `f`.
fn residual(
    c: &crate::liealgebra::StructureConstants,
    linear: &PolyMatrix,
    f: &[Polynomial],
    n: usize,
) -> Vec<Vec<Polynomial>> {
    (0..n)
        .map(|mi| {
            let grad: Vec<Polynomial> = (0..n).map(|l| f[mi].d(l)).collect();
            (0..n)
                .map(|j| {
                    let mut r = Polynomial::zero(n);
                    for (k, fk) in f.iter().enumerate() {
                        let ck = c.coeff(mi, j, k);
                        if !ck.is_zero() {
                            r = &r + &fk.scale(&ck);
                        }
                    }
                    for (l, g) in grad.iter().enumerate() {
                        let lj = linear.get(l, j);
                        if !lj.is_zero() && !g.is_zero() {
                            r = &r - &(lj * g);
                        }
                    }
                    r
                })
                .collect()
        })
        .collect()
}

/// Converts the residual into the next homogeneous part, checking that
/// the gradient it prescribes is closed.
fn next_part(
    solve: &RatMatrix,
    residual: &[Vec<Polynomial>],
    n: usize,
    d: usize,
) -> Result<Vec<Polynomial>, ChartError> {
    let scale = Rational::one() / Rational::from_integer((d as i64 + 1).into());
    residual
        .iter()
        .map(|r| {
            let grad: Vec<Polynomial> = (0..n)
                .map(|l| {
                    (0..n).fold(Polynomial::zero(n), |acc, j| {
                        let s = solve.get(l, j);
                        if s.is_zero() {
                            acc
                        } else {
                            &acc + &r[j].scale(s)
                        }
                    })
                })
                .collect();
            for a in 0..n {
                for b in a + 1..n {
                    if grad[a].d(b) != grad[b].d(a) {
                        return Err(ChartError::MixedPartials { degree: d + 1 });
                    }
                }
            }
            // Euler: (d+1)·q = Σ_l x_l ∂_l q
            let q = grad
                .iter()
                .enumerate()
                .fold(Polynomial::zero(n), |acc, (l, g)| &acc + &(&Polynomial::var(n, l) * g));
            Ok(q.scale(&scale))
        })
        .collect()
}

/// Extends `u ↦ u⁺` to constant multivectors, linearly and through wedges.
pub fn left_multivector(m: &ChartModel, w: &ConstMultiVector) -> Result<PolyMultiVector, ChartError> {
    nilindex(m)?;
    extend_multivector(m, w, |e| {
        let mut v = vec![Rational::zero(); m.dim()];
        v[e] = Rational::one();
        left_invariant_field(m, &v).map(|s| s.field)
    })
}

/// `w⁺ − w⁻` for a constant bivector `w`.
pub fn lie_poisson_difference(m: &ChartModel, w: &ConstMultiVector) -> Result<PolyMultiVector, ChartError> {
    if w.arity() != 2 {
        return Err(crate::tensorcalc::TensorError::Arity {
            expected: 2,
            found: w.arity(),
        }
        .into());
    }
    let left = left_multivector(m, w)?;
    let right = right_multivector(m, w)?;
    Ok(left.checked_sub(&right)?)
}

/// Compares the flat derivative of `t` along `u⁺` with the dual of the Lie
/// derivative of its dual. `t` must be a vector field or a 1-form.
pub fn parallel_transport_identity_check(m: &ChartModel, u: &[Rational], t: &Tensor) -> Result<bool, ChartError> {
    let x = left_invariant_field(m, u)?.field;
    let s = polynomial_s(m)?;
    let p = m.poisson_matrix();
    let lhs = directional_derivative(&x, t)?;
    let lie = match dualize(t, s, p)? {
        Tensor::Form(f) if f.arity() == 1 => Tensor::Form(lie_derivative_form(&x, &f)?),
        Tensor::Vector(v) => Tensor::Vector(lie_bracket(&x, &v)?),
        _ => {
            return Err(crate::tensorcalc::TensorError::Unsupported(
                "transport identity is checked on vector fields and 1-forms".into(),
            )
            .into())
        }
    };
    let rhs = dualize(&lie, s, p)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affinechart::build_chart;
    use crate::liealgebra::{StructureConstants, TwoCocycle};
    use crate::polycore::rat;

    fn heis4() -> ChartModel {
        let c = StructureConstants::from_brackets(4, [(0, 1, vec![rat(0), rat(0), rat(1), rat(0)])]).unwrap();
        let w = TwoCocycle::from_pairs(4, [(0, 3, rat(1)), (1, 2, rat(1))]).unwrap();
        build_chart(&c, &w).unwrap()
    }

    #[test]
    fn abelian_left_equals_right() {
        let c = StructureConstants::abelian(2);
        let w = TwoCocycle::from_pairs(2, [(0, 1, rat(1))]).unwrap();
        let m = build_chart(&c, &w).unwrap();
        let s = left_invariant_field(&m, &[rat(2), rat(-1)]).unwrap();
        assert_eq!(s.achieved_degree, 0);
        let r = crate::affinechart::right_invariant_field(&m, &[rat(2), rat(-1)]).unwrap();
        assert_eq!(s.field, r);
    }

    #[test]
    fn heisenberg_fields_commute_with_right_fields() {
        let m = heis4();
        for i in 0..4 {
            let mut u = vec![rat(0); 4];
            u[i] = rat(1);
            let s = left_invariant_field(&m, &u).unwrap();
            assert!(s.achieved_degree <= 2);
            for j in 0..4 {
                let mut v = vec![rat(0); 4];
                v[j] = rat(1);
                let r = crate::affinechart::right_invariant_field(&m, &v).unwrap();
                assert!(lie_bracket(&s.field, &r).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn refuses_non_nilpotent() {
        let c = StructureConstants::from_brackets(2, [(0, 1, vec![rat(0), rat(1)])]).unwrap();
        let w = TwoCocycle::from_pairs(2, [(0, 1, rat(1))]).unwrap();
        let m = build_chart(&c, &w).unwrap();
        assert!(matches!(
            left_invariant_field(&m, &[rat(1), rat(0)]),
            Err(ChartError::NotNilpotent(_))
        ));
    }
}
