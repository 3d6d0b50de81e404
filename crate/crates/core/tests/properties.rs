mod common;

use proptest::prelude::*;

use sympoly::affinechart::{
    bracket_degree_dichotomy, build_chart, degree_table, right_invariant_field, symplectic_matrix,
};
use sympoly::generate::{random_nilpotent_pair, random_valid_pairs};
use sympoly::polycore::{ratio, PolyMatrix, Polynomial, Rational};
use sympoly::tensorcalc::{
    dualize, exterior_derivative, lie_bracket, schouten_bracket, PolyForm, PolyMultiVector, PolyVectorField, Tensor,
};

const N: usize = 3;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, b)| ratio(a, b))
}

fn poly_in(n: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), rational()), 0..=max_terms).prop_map(move |terms| {
        let terms = terms.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= max_deg);
        Polynomial::from_terms(n, terms).unwrap()
    })
}

fn poly() -> impl Strategy<Value = Polynomial> {
    poly_in(N, 3, 5)
}

fn point() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), N)
}

fn field(n: usize, deg: u32) -> impl Strategy<Value = PolyVectorField> {
    prop::collection::vec(poly_in(n, deg, 3), n).prop_map(|c| PolyVectorField::new(c).unwrap())
}

fn form(n: usize, arity: usize) -> impl Strategy<Value = PolyForm> {
    let count = binomial(n, arity);
    prop::collection::vec(poly_in(n, 2, 3), count).prop_map(move |cs| {
        let mut f = PolyForm::zero(n, arity);
        for (idx, c) in subsets(n, arity).into_iter().zip(cs) {
            f.add_component(&idx, c).unwrap();
        }
        f
    })
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (0..n)
        .flat_map(|i| {
            subsets(n, k - 1)
                .into_iter()
                .filter(move |s| s.iter().all(|&j| j > i))
                .map(move |mut s| {
                    s.insert(0, i);
                    s
                })
        })
        .collect()
}

fn linear_matrix(size: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(poly_in(2, 1, 2), size * size)
        .prop_map(move |es| PolyMatrix::from_rows(es.chunks(size).map(|c| c.to_vec()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn eval_is_a_homomorphism(p in poly(), q in poly(), x in point()) {
        prop_assert_eq!((&p * &q).eval(&x).unwrap(), p.eval(&x).unwrap() * q.eval(&x).unwrap());
        prop_assert_eq!((&p + &q).eval(&x).unwrap(), p.eval(&x).unwrap() + q.eval(&x).unwrap());
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let names = ["x1", "x2", "x3"];
        prop_assert_eq!(Polynomial::parse(&p.to_text(&names), &names).unwrap(), p);
    }

    #[test]
    fn leibniz_rule(p in poly(), q in poly(), k in 0..N) {
        let lhs = (&p * &q).partial(k).unwrap();
        let rhs = &(&p.partial(k).unwrap() * &q) + &(&p * &q.partial(k).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjugate_identity(m in (2usize..=5).prop_flat_map(linear_matrix)) {
        let (det, adj) = m.det_adjugate().unwrap();
        let prod = m.checked_mul(&adj).unwrap();
        let n = m.rows();
        let want = PolyMatrix::identity(n, 2).map(|e| e * &det);
        prop_assert_eq!(prod, want);
        prop_assert_eq!(det, m.det().unwrap());
    }

    #[test]
    fn d_squared_vanishes(f in form(N, 1), g in form(4, 2)) {
        prop_assert!(exterior_derivative(&exterior_derivative(&f).unwrap()).unwrap().is_zero());
        prop_assert!(exterior_derivative(&exterior_derivative(&g).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn lie_bracket_jacobi(x in field(N, 1), y in field(N, 1), z in field(N, 1)) {
        let xy = lie_bracket(&x, &y).unwrap();
        prop_assert_eq!(&xy, &lie_bracket(&y, &x).unwrap().scale(&ratio(-1, 1)));
        let j = lie_bracket(&x, &lie_bracket(&y, &z).unwrap()).unwrap()
            .checked_add(&lie_bracket(&y, &lie_bracket(&z, &x).unwrap()).unwrap()).unwrap()
            .checked_add(&lie_bracket(&z, &xy).unwrap()).unwrap();
        prop_assert!(j.is_zero());
    }

    #[test]
    fn wedge_is_graded_commutative(a in form(4, 1), b in form(4, 2), c in form(4, 1)) {
        prop_assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        prop_assert_eq!(a.wedge(&c).unwrap(), c.wedge(&a).unwrap().neg());
    }

    #[test]
    fn dualize_round_trip_over_g1(v in field(4, 2), a in form(4, 1), b in form(4, 2)) {
        let m = common::model("g1");
        let s = symplectic_matrix(&m).unwrap().polynomial().unwrap().clone();
        let p = m.poisson_matrix();
        for t in [Tensor::Vector(v), Tensor::Form(a), Tensor::Form(b)] {
            let back = dualize(&dualize(&t, &s, p).unwrap(), &s, p).unwrap();
            prop_assert_eq!(back, t);
        }
    }

    #[test]
    fn generated_charts_satisfy_invariants(seed in any::<u64>()) {
        for (c, w) in random_valid_pairs(seed, 3) {
            let m = build_chart(&c, &w).unwrap();
            let p = m.poisson_matrix();
            prop_assert!(p.is_antisymmetric());
            prop_assert_eq!(&p.constant_part(), w.matrix());
            prop_assert!(p.degree() <= 1);
            prop_assert!(bracket_degree_dichotomy(&m));
            let pi = m.poisson_bivector();
            prop_assert!(schouten_bracket(&pi, &pi).unwrap().is_zero());
        }
    }

    #[test]
    fn nilpotent_charts_meet_degree_table(seed in any::<u64>(), half in 1usize..=3) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let (c, w) = random_nilpotent_pair(2 * half, &mut rng);
        let m = build_chart(&c, &w).unwrap();
        // nilpotent algebras are unimodular, so S is polynomial
        prop_assert!(symplectic_matrix(&m).unwrap().is_polynomial());
        for row in degree_table(&m).unwrap() {
            prop_assert!(row.pass(), "{} observed {} > {}", row.tensor, row.observed, row.bound);
        }
    }

    #[test]
    fn right_fields_are_linear(seed in any::<u64>(), a in rational(), b in rational()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m = common::model(common::GROUPS[(seed % 4) as usize]);
        let u = common::random_vector(&mut rng, 4);
        let v = common::random_vector(&mut rng, 4);
        let combo: Vec<Rational> = u.iter().zip(&v).map(|(x, y)| x * &a + y * &b).collect();
        let lhs = right_invariant_field(&m, &combo).unwrap();
        let rhs = right_invariant_field(&m, &u).unwrap().scale(&a)
            .checked_add(&right_invariant_field(&m, &v).unwrap().scale(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn multivector_text_round_trip() {
    let m = common::model("g1");
    let pi = m.poisson_bivector();
    let back = PolyMultiVector::parse(&pi.to_text(m.names()), m.names(), 2).unwrap();
    assert_eq!(back, pi);
}
