//! Seeded random symplectic Lie algebras for property tests and the CLI.
//!
//! Nilpotent examples come from iterated central extensions: each step
//! picks a random 2-cocycle `β` of the current algebra and adjoins a new
//! central basis vector `z` with `[e_i, e_j]' = [e_i, e_j] + β_ij z`. The
//! result is triangular (brackets only reach higher indices) and satisfies
//! Jacobi by construction. A non-degenerate `ω` is then drawn from the
//! cocycle space. Conjugating a catalog entry by a random basis change
//! gives non-nilpotent examples.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::liealgebra::{check_nondegenerate, StructureConstants, TwoCocycle};
use crate::polycore::{rat, RatMatrix, Rational};

/// Basis of the space of scalar 2-cocycles `Z²(g)`.
pub fn cocycle_space(c: &StructureConstants) -> Vec<TwoCocycle> {
    let n = c.dim();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let col = |a: usize, b: usize| -> (usize, Rational) {
        if a < b {
            (pairs.iter().position(|&p| p == (a, b)).expect("pair"), rat(1))
        } else {
            (pairs.iter().position(|&p| p == (b, a)).expect("pair"), rat(-1))
        }
    };
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = vec![Rational::zero(); pairs.len()];
                for (a, b, d) in [(i, j, k), (j, k, i), (k, i, j)] {
                    for l in 0..n {
                        let cl = c.coeff(a, b, l);
                        if !cl.is_zero() && l != d {
                            let (idx, sign) = col(l, d);
                            row[idx] += cl * sign;
                        }
                    }
                }
                rows.push(row);
            }
        }
    }
    let basis: Vec<Vec<Rational>> = if rows.is_empty() {
        (0..pairs.len())
            .map(|p| (0..pairs.len()).map(|q| if p == q { rat(1) } else { rat(0) }).collect())
            .collect()
    } else {
        RatMatrix::from_rows(rows).null_space()
    };
    basis
        .into_iter()
        .map(|v| {
            TwoCocycle::from_pairs(n, pairs.iter().zip(v).map(|(&(i, j), x)| (i, j, x)))
                .expect("distinct ordered pairs")
        })
        .collect()
}

fn combine(basis: &[TwoCocycle], n: usize, rng: &mut impl Rng, range: i64) -> TwoCocycle {
    let mut m = RatMatrix::zeros(n, n);
    for b in basis {
        let k = rat(rng.gen_range(-range..=range));
        if k.is_zero() {
            continue;
        }
        for i in 0..n {
            for j in 0..n {
                let v = m.get(i, j) + b.get(i, j) * &k;
                m.set(i, j, v);
            }
        }
    }
    TwoCocycle::new(m).expect("sum of antisymmetric matrices")
}

/// A random non-degenerate cocycle, if one turns up within a few draws.
pub fn random_symplectic_cocycle(c: &StructureConstants, rng: &mut impl Rng) -> Option<TwoCocycle> {
    let n = c.dim();
    let basis = cocycle_space(c);
    if basis.is_empty() {
        return None;
    }
    (0..24)
        .map(|_| combine(&basis, n, rng, 2))
        .find(|w| check_nondegenerate(w).is_ok())
}

/// A random nilpotent algebra of dimension `dim` built by central
/// extensions of an abelian seed.
pub fn random_nilpotent_algebra(dim: usize, rng: &mut impl Rng) -> StructureConstants {
    let start = rng.gen_range(1..=dim.clamp(1, 3));
    let mut c = StructureConstants::abelian(start);
    while c.dim() < dim {
        let n = c.dim();
        let beta = combine(&cocycle_space(&c), n, rng, 1);
        let mut next = StructureConstants::abelian(n + 1);
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let v = c.coeff(i, j, k);
                    if !v.is_zero() {
                        next.set_coefficient(i, j, k, v).expect("in range");
                    }
                }
                let b = beta.get(i, j).clone();
                if !b.is_zero() {
                    next.set_coefficient(i, j, n, b).expect("in range");
                }
            }
        }
        c = next;
    }
    c
}

/// A random nilpotent symplectic pair of even dimension `dim`.
pub fn random_nilpotent_pair(dim: usize, rng: &mut impl Rng) -> (StructureConstants, TwoCocycle) {
    assert!(
        dim >= 2 && dim.is_multiple_of(2),
        "symplectic dimension must be even and positive"
    );
    loop {
        let c = random_nilpotent_algebra(dim, rng);
        if let Some(w) = random_symplectic_cocycle(&c, rng) {
            return (c, w);
        }
    }
}

/// A random invertible integer matrix, unit upper triangular times a
/// permutation, so its inverse stays integral.
fn random_unimodular_matrix(n: usize, rng: &mut impl Rng) -> RatMatrix {
    let mut u = RatMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            u.set(i, j, rat(rng.gen_range(-1..=1)));
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = RatMatrix::zeros(n, n);
    for i in 0..n {
        for (j, &pj) in perm.iter().enumerate() {
            g.set(i, j, u.get(i, pj).clone());
        }
    }
    g
}

/// A catalog entry of dimension four, written in a random basis.
pub fn random_catalog_conjugate(rng: &mut impl Rng) -> (StructureConstants, TwoCocycle) {
    let ids = ["g1", "g2", "g3", "g4"];
    let e = catalog::load(ids.choose(rng).expect("nonempty")).expect("catalog id");
    let g = random_unimodular_matrix(e.algebra.dim(), rng);
    let c = e.algebra.change_basis(&g).expect("invertible");
    (c, e.omega.change_basis(&g))
}

/// `count` reproducible valid pairs of dimension at most 6, mixing
/// nilpotent extensions with conjugated catalog entries.
pub fn random_valid_pairs(seed: u64, count: usize) -> Vec<(StructureConstants, TwoCocycle)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            if i % 3 == 2 {
                random_catalog_conjugate(&mut rng)
            } else {
                let dim = *[2, 4, 6].choose(&mut rng).expect("nonempty");
                random_nilpotent_pair(dim, &mut rng)
            }
        })
        .collect()
}
