#![allow(dead_code)]

use rand::Rng;
use sympoly::affinechart::ChartModel;
use sympoly::catalog;
use sympoly::polycore::{rat, ratio, Polynomial, Rational};

pub const GROUPS: [&str; 4] = ["g1", "g2", "g3", "g4"];

pub fn model(id: &str) -> ChartModel {
    catalog::load(id).unwrap().chart().unwrap()
}

pub fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![rat(0); n];
    v[i] = rat(1);
    v
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// A random polynomial with at most `terms` monomials of degree at most `deg`.
pub fn random_poly(rng: &mut impl Rng, n: usize, deg: u32, terms: usize) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..terms {
        let mut m = Polynomial::constant(n, rat(rng.gen_range(-3..=3)));
        for _ in 0..rng.gen_range(0..=deg) {
            m = &m * &Polynomial::var(n, rng.gen_range(0..n));
        }
        p = &p + &m;
    }
    p
}
