use num_traits::Zero;

use super::multivector::{check_cybe, yang_baxter_r};
use super::{StructureConstants, TwoCocycle, Violation};
use crate::polycore::linalg::span_basis;
use crate::polycore::Rational;

fn jacobiator(c: &StructureConstants, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let n = c.dim();
    let e = |a: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        v[a] = Rational::from_integer(1.into());
        v
    };
    let term = |a: usize, b: usize, d: usize| c.bracket(&c.bracket_basis(a, b), &e(d));
    let (x, y, z) = (term(i, j, k), term(j, k, i), term(k, i, j));
    (0..n).map(|l| &x[l] + &y[l] + &z[l]).collect()
}

/// Checks `[[e_i,e_j],e_k] + cyclic = 0` for all `i < j < k`.
pub fn check_jacobi(c: &StructureConstants) -> Result<(), Violation> {
    let n = c.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let jac = jacobiator(c, i, j, k);
                if let Some(l) = jac.iter().position(|v| !v.is_zero()) {
                    return Err(Violation::Jacobi {
                        i,
                        j,
                        k,
                        l,
                        value: jac[l].clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Checks `ω([e_i,e_j],e_k) + ω([e_j,e_k],e_i) + ω([e_k,e_i],e_j) = 0` on
/// every basis triple.
pub fn check_cocycle(omega: &TwoCocycle, c: &StructureConstants) -> Result<(), Violation> {
    let n = c.dim();
    if omega.dim() != n {
        return Err(Violation::DimensionMismatch {
            algebra: n,
            cocycle: omega.dim(),
        });
    }
    let w = |a: usize, b: usize, d: usize| -> Rational {
        (0..n).fold(Rational::zero(), |acc, k| acc + c.coeff(a, b, k) * omega.get(k, d))
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let value = w(i, j, k) + w(j, k, i) + w(k, i, j);
                if !value.is_zero() {
                    return Err(Violation::Cocycle { i, j, k, value });
                }
            }
        }
    }
    Ok(())
}

pub fn check_nondegenerate(omega: &TwoCocycle) -> Result<(), Violation> {
    let rank = omega.matrix().rank();
    if rank == omega.dim() {
        Ok(())
    } else {
        Err(Violation::Degenerate { rank, dim: omega.dim() })
    }
}

/// Checks `trace(ad e_i) = Σ_k C^k_ik = 0` for every basis vector.
pub fn check_unimodular(c: &StructureConstants) -> Result<(), Violation> {
    for i in 0..c.dim() {
        let trace = (0..c.dim()).fold(Rational::zero(), |acc, k| acc + c.coeff(i, k, k));
        if !trace.is_zero() {
            return Err(Violation::NotUnimodular { basis: i, trace });
        }
    }
    Ok(())
}

/// A descending series of subspaces, each given by a row-reduced basis.
/// The first term is the whole algebra; the last is either `0` or the
/// first repeated term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub terms: Vec<Vec<Vec<Rational>>>,
}

impl SeriesReport {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Vec::len).collect()
    }

    pub fn reaches_zero(&self) -> bool {
        self.terms.last().is_some_and(Vec::is_empty)
    }

    /// Number of nonzero terms when the series reaches zero.
    pub fn length(&self) -> Option<usize> {
        self.reaches_zero().then(|| self.terms.len() - 1)
    }
}

fn bracket_span(c: &StructureConstants, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut gens = Vec::new();
    for u in a {
        for v in b {
            let w = c.bracket(u, v);
            if w.iter().any(|x| !x.is_zero()) {
                gens.push(w);
            }
        }
    }
    span_basis(&gens, c.dim())
}

fn series(c: &StructureConstants, lower: bool) -> SeriesReport {
    let whole: Vec<Vec<Rational>> = span_basis(
        &(0..c.dim())
            .map(|i| {
                let mut v = vec![Rational::zero(); c.dim()];
                v[i] = Rational::from_integer(1.into());
                v
            })
            .collect::<Vec<_>>(),
        c.dim(),
    );
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_empty() {
            break;
        }
        let next = if lower {
            bracket_span(c, &whole, last)
        } else {
            bracket_span(c, last, last)
        };
        let stalled = next.len() == last.len();
        terms.push(next);
        if stalled {
            break;
        }
    }
    SeriesReport { terms }
}

/// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`. Assumes the Jacobi identity.
pub fn lower_central_series(c: &StructureConstants) -> SeriesReport {
    series(c, true)
}

/// `g ⊇ [g,g] ⊇ [[g,g],[g,g]] ⊇ …`. Assumes the Jacobi identity.
pub fn derived_series(c: &StructureConstants) -> SeriesReport {
    series(c, false)
}

/// Nilindex of a nilpotent algebra, or the stalled step as witness.
pub(crate) fn nilpotency(c: &StructureConstants) -> Result<usize, Violation> {
    let s = lower_central_series(c);
    s.length().ok_or_else(|| Violation::NotNilpotent {
        stable_dim: *s.dims().last().expect("nonempty"),
        step: s.terms.len() - 2,
    })
}

/// Every algebraic verdict on a pair `(C, ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub jacobi: Result<(), Violation>,
    pub cocycle: Result<(), Violation>,
    pub nondegenerate: Result<(), Violation>,
    pub unimodular: Result<(), Violation>,
    /// Nilindex, or the non-nilpotency witness; `None` when Jacobi fails.
    pub nilpotent: Option<Result<usize, Violation>>,
    /// `None` when Jacobi fails.
    pub solvable: Option<bool>,
    /// CYBE for the r-matrix of `ω`; `None` when `ω` is degenerate.
    pub cybe: Option<Result<(), Violation>>,
}

impl AlgebraReport {
    pub fn new(c: &StructureConstants, omega: &TwoCocycle) -> Self {
        let jacobi = check_jacobi(c);
        let lie = jacobi.is_ok();
        let nondegenerate = check_nondegenerate(omega);
        let cybe = yang_baxter_r(omega).ok().map(|r| check_cybe(&r, c));
        AlgebraReport {
            cocycle: check_cocycle(omega, c),
            unimodular: check_unimodular(c),
            nilpotent: lie.then(|| nilpotency(c)),
            solvable: lie.then(|| derived_series(c).reaches_zero()),
            jacobi,
            nondegenerate,
            cybe,
        }
    }

    pub fn nilindex(&self) -> Option<usize> {
        self.nilpotent.as_ref().and_then(|r| r.as_ref().ok().copied())
    }

    pub fn is_unimodular(&self) -> bool {
        self.unimodular.is_ok()
    }

    /// Jacobi, cocycle, non-degeneracy and CYBE all pass.
    pub fn structural_ok(&self) -> bool {
        self.jacobi.is_ok()
            && self.cocycle.is_ok()
            && self.nondegenerate.is_ok()
            && self.cybe.as_ref().is_some_and(Result::is_ok)
    }

    /// The first structural failure, if any.
    pub fn first_failure(&self) -> Option<&Violation> {
        [&self.jacobi, &self.cocycle, &self.nondegenerate]
            .into_iter()
            .chain(self.cybe.as_ref())
            .find_map(|r| r.as_ref().err())
    }
}
