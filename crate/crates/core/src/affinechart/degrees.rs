//! Degree bounds of the chart tensors.

use super::{polynomial_s, right_multivector, symplectic_matrix, volume_form, ChartError, ChartModel};
use crate::liealgebra::ConstMultiVector;
use crate::tensorcalc::{PolyMultiVector, PolyTensor};

/// One row of the degree table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCheck {
    pub tensor: String,
    pub bound: i64,
    pub observed: i64,
}

impl DegreeCheck {
    pub fn pass(&self) -> bool {
        self.observed <= self.bound
    }
}

/// The degree table: `P` and every right-invariant `k`-vector of basis
/// wedges have degree at most `k`; when `S` is polynomial it has degree
/// at most `n − 1` and the top power of the symplectic form is constant.
pub fn degree_table(m: &ChartModel) -> Result<Vec<DegreeCheck>, ChartError> {
    let n = m.dim();
    let mut rows = vec![DegreeCheck {
        tensor: "P".into(),
        bound: 1,
        observed: m.poisson_matrix().degree(),
    }];
    let fields = (0..n)
        .map(|i| right_multivector(m, &ConstMultiVector::basis(n, &[i])?))
        .collect::<Result<Vec<_>, ChartError>>()?;
    // max degree of e_I⁻ over basis wedges, grown one index at a time
    let mut observed = vec![-1i64; n + 1];
    let mut stack: Vec<(usize, PolyMultiVector)> = (0..n).map(|i| (i, fields[i].clone())).collect();
    while let Some((last, w)) = stack.pop() {
        let k = w.arity();
        observed[k] = observed[k].max(w.max_degree());
        for (j, f) in fields.iter().enumerate().skip(last + 1) {
            stack.push((j, w.wedge(f)?));
        }
    }
    for (k, &obs) in observed.iter().enumerate().skip(1) {
        rows.push(DegreeCheck {
            tensor: format!("right {k}-vectors"),
            bound: k as i64,
            observed: obs,
        });
    }
    if symplectic_matrix(m)?.is_polynomial() {
        rows.push(DegreeCheck {
            tensor: "S".into(),
            bound: n as i64 - 1,
            observed: polynomial_s(m)?.degree(),
        });
        if n.is_multiple_of(2) {
            rows.push(DegreeCheck {
                tensor: "top power of omega+".into(),
                bound: 0,
                observed: volume_form(m)?.max_degree(),
            });
        }
    }
    Ok(rows)
}

/// `P_ij` has degree exactly 1 when `[e_i, e_j] ≠ 0` and is constant
/// otherwise.
pub fn bracket_degree_dichotomy(m: &ChartModel) -> bool {
    let n = m.dim();
    let c = m.algebra();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let nonzero = c.bracket_basis(i, j).iter().any(|x| !num_traits::Zero::is_zero(x));
            let d = m.poisson_matrix().get(i, j).degree();
            if nonzero {
                d == 1
            } else {
                d <= 0
            }
        })
    })
}
