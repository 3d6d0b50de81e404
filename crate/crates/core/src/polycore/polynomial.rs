//! Sparse multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{format_abs, rat, Rational};
use super::PolyError;

/// Exponent vector, ordered graded-lexicographically (total degree first,
/// then lexicographic with the first variable most significant).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut e = vec![0; nvars];
        e[k] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.0.len(), nvars, "monomial length must equal nvars");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// The coordinate function `x_k`.
    ///
    /// Panics if `k >= nvars`.
    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k < nvars, "variable index {k} out of range for {nvars} variables");
        Self::monomial(nvars, Monomial::var(nvars, k), Rational::one())
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(PolyError::ArityMismatch {
                    expected: nvars,
                    found: exps.len(),
                });
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; the zero polynomial has degree −1.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    pub fn is_constant(&self) -> bool {
        self.degree() <= 0
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.nvars))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn check_same(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_same(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative with respect to `x_k`.
    pub fn partial(&self, k: usize) -> Result<Polynomial, PolyError> {
        if k >= self.nvars {
            return Err(PolyError::VariableOutOfRange {
                index: k,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[k];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[k] -= 1;
            out.add_term(Monomial(exps), c * rat(e as i64));
        }
        Ok(out)
    }

    /// Partial derivative for an index already known to be in range.
    pub(crate) fn d(&self, k: usize) -> Polynomial {
        self.partial(k).expect("derivative index in range")
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves
    /// a remainder (or the divisor is zero).
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        self.check_same(divisor).ok()?;
        let (lm, lc) = divisor.leading()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            let qm = m.div(lm)?;
            let qc = c / lc;
            let step = Polynomial::monomial(self.nvars, qm, qc);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }

    /// Replaces each variable `x_k` by `subs[k]` (all in a common ring).
    pub fn compose(&self, subs: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if subs.len() != self.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: subs.len(),
            });
        }
        let target = subs.first().map(|p| p.nvars).unwrap_or(0);
        if let Some(p) = subs.iter().find(|p| p.nvars != target) {
            return Err(PolyError::ArityMismatch {
                expected: target,
                found: p.nvars,
            });
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (s, &e) in subs.iter().zip(&m.0) {
                t = &t * &s.pow(e);
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Canonical text with the given variable names: terms in descending
    /// graded-lex order, e.g. `-1/2*X^2 + X*Z`.
    pub fn to_text<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&term_body(m, c, names));
        }
        out
    }
}

fn term_body<S: AsRef<str>>(m: &Monomial, c: &Rational, names: &[S]) -> String {
    let mono: Vec<String> =
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                let name = names
                    .get(k)
                    .map(|s| s.as_ref().to_string())
                    .unwrap_or_else(|| format!("x{}", k + 1));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
    if mono.is_empty() {
        return format_abs(c);
    }
    let mono = mono.join("*");
    if c.abs().is_one() {
        mono
    } else {
        format!("{}*{}", format_abs(c), mono)
    }
}

/// Default chart variable names `x1..xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&default_names(self.nvars)))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial variable count mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial variable count mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial variable count mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
