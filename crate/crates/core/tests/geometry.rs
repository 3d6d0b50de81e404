mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{model, random_poly, random_vector, unit, GROUPS};
use sympoly::affinechart::{
    build_chart, right_invariant_field, right_invariant_form, right_multivector, symplectic_form, symplectic_matrix,
    LEFT_BRACKET_SIGN, RIGHT_BRACKET_SIGN,
};
use sympoly::catalog::{self, numeric_oracle, OracleTensor};
use sympoly::generate::{random_nilpotent_pair, random_valid_pairs};
use sympoly::leftinvariant::{left_invariant_field, left_multivector, parallel_transport_identity_check};
use sympoly::liealgebra::{cybe_tensor, lower_central_series, ConstMultiVector};
use sympoly::polycore::{rat, PolyMatrix, Rational};
use sympoly::tensorcalc::{
    interior_product, lie_bracket, schouten_bracket, PolyForm, PolyMultiVector, PolyVectorField, Tensor,
};

fn signed(sign: i32, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| x * rat(sign as i64)).collect()
}

#[test]
fn right_bracket_sign_is_global() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for id in catalog::ids() {
        let m = model(id);
        let n = m.dim();
        for _ in 0..10 {
            let (u, v) = (random_vector(&mut rng, n), random_vector(&mut rng, n));
            let lhs = lie_bracket(
                &right_invariant_field(&m, &u).unwrap(),
                &right_invariant_field(&m, &v).unwrap(),
            )
            .unwrap();
            let uv = m.algebra().bracket(&u, &v);
            let rhs = right_invariant_field(&m, &signed(RIGHT_BRACKET_SIGN, &uv)).unwrap();
            assert_eq!(lhs, rhs, "{id}");
        }
    }
}

#[test]
fn left_bracket_sign_and_identity_value() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for id in ["g1", "g4"] {
        let m = model(id);
        let zero = vec![rat(0); 4];
        for _ in 0..6 {
            let (u, v) = (random_vector(&mut rng, 4), random_vector(&mut rng, 4));
            let lu = left_invariant_field(&m, &u).unwrap().field;
            let lv = left_invariant_field(&m, &v).unwrap().field;
            let uv = m.algebra().bracket(&u, &v);
            let rhs = left_invariant_field(&m, &signed(LEFT_BRACKET_SIGN, &uv)).unwrap().field;
            assert_eq!(lie_bracket(&lu, &lv).unwrap(), rhs, "{id}");
            let ru = right_invariant_field(&m, &u).unwrap();
            assert_eq!(lu.eval(&zero).unwrap(), ru.eval(&zero).unwrap(), "{id}: u⁺(0) ≠ u⁻(0)");
        }
    }
}

#[test]
fn coordinates_are_hamiltonian_for_the_negated_form() {
    // i_{u_i⁻} ω⁺ = dx_i holds for ω⁺ = −Σ S_ij dx_i∧dx_j
    let mut models: Vec<_> = GROUPS.iter().map(|id| model(id)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for dim in [2, 4, 6] {
        let (c, w) = random_nilpotent_pair(dim, &mut rng);
        models.push(build_chart(&c, &w).unwrap());
    }
    for m in &models {
        let form = symplectic_form(m).unwrap();
        for i in 0..m.dim() {
            let u = right_invariant_field(m, &unit(m.dim(), i)).unwrap();
            assert_eq!(
                interior_product(&u, &form).unwrap(),
                PolyForm::coordinate(m.dim(), i).neg()
            );
        }
    }
}

#[test]
fn gradient_from_frame_derivatives() {
    // ∇f = −S·(u_1⁻f, …, u_n⁻f)
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for id in GROUPS {
        let m = model(id);
        let s = symplectic_matrix(&m).unwrap().polynomial().unwrap().clone();
        for _ in 0..5 {
            let f = random_poly(&mut rng, 4, 3, 5);
            let frame: Vec<_> = (0..4)
                .map(|i| right_invariant_field(&m, &unit(4, i)).unwrap().apply(&f))
                .collect();
            let grad: Vec<_> = (0..4).map(|k| f.partial(k).unwrap()).collect();
            let rebuilt = s.neg().apply(&frame).unwrap();
            assert_eq!(rebuilt, grad, "{id}");
        }
    }
}

#[test]
fn right_forms_and_left_fields_respect_degree_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for (c, w) in random_valid_pairs(99, 15) {
        let m = build_chart(&c, &w).unwrap();
        let n = m.dim();
        let alpha = random_vector(&mut rng, n);
        if let Ok(f) = right_invariant_form(&m, &alpha) {
            assert!(f.degree() < n as i64);
        }
        if let Some(cap) = lower_central_series(&c).length() {
            let s = left_invariant_field(&m, &random_vector(&mut rng, n)).unwrap();
            assert!(s.achieved_degree <= cap);
            for j in 0..n {
                let r = right_invariant_field(&m, &unit(n, j)).unwrap();
                assert!(lie_bracket(&s.field, &r).unwrap().is_zero());
            }
        }
    }
    for (id, cap) in [("g1", 3), ("g4", 2)] {
        let m = model(id);
        for _ in 0..10 {
            assert!(
                left_invariant_field(&m, &random_vector(&mut rng, 4))
                    .unwrap()
                    .achieved_degree
                    <= cap
            );
        }
    }
}

#[test]
fn left_multivectors_of_basis_wedges() {
    let m = model("g4");
    let w = ConstMultiVector::basis(4, &[0, 1]).unwrap();
    let l = left_multivector(&m, &w).unwrap();
    assert!(l.degree() <= 2);
    let a = left_invariant_field(&m, &unit(4, 0)).unwrap().field.to_multivector();
    let b = left_invariant_field(&m, &unit(4, 1)).unwrap().field.to_multivector();
    assert_eq!(l, a.wedge(&b).unwrap());
}

#[test]
fn cybe_matches_schouten_of_right_bivector() {
    // [r⁻, r⁻] = 2·RIGHT_BRACKET_SIGN·([r, r])⁻
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for id in catalog::ids() {
        let m = model(id);
        let n = m.dim();
        for _ in 0..5 {
            let mut r = ConstMultiVector::zero(n, 2);
            for i in 0..n {
                for j in i + 1..n {
                    r.add_component(&[i, j], common::random_rational(&mut rng)).unwrap();
                }
            }
            let rm = right_multivector(&m, &r).unwrap();
            let lhs = schouten_bracket(&rm, &rm).unwrap();
            let t = cybe_tensor(&r, m.algebra()).unwrap();
            let rhs = if n >= 3 {
                right_multivector(&m, &t.scale(&rat(2 * RIGHT_BRACKET_SIGN as i64))).unwrap()
            } else {
                PolyMultiVector::zero(n, 3)
            };
            assert_eq!(lhs, rhs, "{id}");
        }
    }
}

#[test]
fn transport_identity() {
    let g1 = model("g1");
    let t = Tensor::Form(PolyForm::coordinate(4, 0));
    assert!(parallel_transport_identity_check(&g1, &unit(4, 3), &t).unwrap());
    let g4 = model("g4");
    let t = Tensor::Vector(right_invariant_field(&g4, &unit(4, 1)).unwrap());
    assert!(parallel_transport_identity_check(&g4, &unit(4, 0), &t).unwrap());
}

#[test]
fn g1_left_field_of_e1() {
    let m = model("g1");
    let f = left_invariant_field(&m, &unit(4, 0)).unwrap().field;
    assert_eq!(f.to_text(m.names()), "-Z*∂X - ∂Y + (-1/2*Z^2 + Y)*∂T");
    let e = catalog::load("g1").unwrap();
    let oracle = e.oracle.unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..5 {
        let x = random_vector(&mut rng, 4);
        let num = numeric_oracle(&oracle, OracleTensor::LeftFields, &x).unwrap();
        let got = f.eval(&x).unwrap();
        assert!((0..4).all(|i| &got[i] == num.get(i, 0)));
    }
}

#[test]
fn g3_right_field_of_e1() {
    let e = catalog::load("g3").unwrap();
    let m = e.chart().unwrap();
    let f = right_invariant_field(&m, &unit(4, 0)).unwrap();
    let oracle = e.oracle.unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..5 {
        let x = random_vector(&mut rng, 4);
        let num = numeric_oracle(&oracle, OracleTensor::RightFields, &x).unwrap();
        let got = f.eval(&x).unwrap();
        assert!((0..4).all(|i| &got[i] == num.get(i, 0)));
    }
}

#[test]
fn oracle_at_identity_is_omega() {
    for id in GROUPS {
        let e = catalog::load(id).unwrap();
        let p0 = numeric_oracle(
            e.oracle.as_ref().unwrap(),
            OracleTensor::Poisson,
            &[rat(0), rat(0), rat(0), rat(0)],
        )
        .unwrap();
        assert_eq!(&p0, e.omega.matrix(), "{id}");
    }
    // g1 P(1,4) = −Y
    let e = catalog::load("g1").unwrap();
    let p = numeric_oracle(
        e.oracle.as_ref().unwrap(),
        OracleTensor::Poisson,
        &[rat(0), rat(2), rat(0), rat(0)],
    )
    .unwrap();
    assert_eq!(p.get(0, 3), &rat(-2));
    // g2 P(1,2) = +Y
    let e = catalog::load("g2").unwrap();
    let p = numeric_oracle(
        e.oracle.as_ref().unwrap(),
        OracleTensor::Poisson,
        &[rat(0), rat(5), rat(0), rat(0)],
    )
    .unwrap();
    assert_eq!(p.get(0, 1), &rat(5));
}

#[test]
fn right_fields_are_columns_of_p() {
    for id in catalog::ids() {
        let m = model(id);
        let n = m.dim();
        for i in 0..n {
            let f = right_invariant_field(&m, &unit(n, i)).unwrap();
            assert_eq!(f.components(), m.poisson_matrix().column(i).as_slice());
            assert!(f.degree() <= 1);
        }
    }
}

#[test]
fn abelian_chart_is_constant() {
    let c = sympoly::liealgebra::StructureConstants::abelian(4);
    let w = sympoly::liealgebra::TwoCocycle::from_pairs(4, [(0, 1, rat(1)), (2, 3, rat(-2))]).unwrap();
    let m = build_chart(&c, &w).unwrap();
    assert_eq!(m.poisson_matrix(), &PolyMatrix::from_rational(w.matrix(), 4));
    let u = right_invariant_field(&m, &unit(4, 0)).unwrap();
    assert_eq!(u, PolyVectorField::coordinate(4, 1).scale(&rat(-1)));
}
