//! Dense matrices of polynomials.

use num_traits::One;

use super::linalg::RatMatrix;
use super::polynomial::Polynomial;
use super::rational::Rational;
use super::PolyError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            entries: vec![Polynomial::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m.set(i, i, Polynomial::one(nvars));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, PolyError> {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        let nvars = rows.iter().flatten().next().map(Polynomial::nvars).unwrap_or(0);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(PolyError::Shape(format!(
                    "ragged rows: expected {c} columns, found {}",
                    row.len()
                )));
            }
            for p in row {
                if p.nvars() != nvars {
                    return Err(PolyError::ArityMismatch {
                        expected: nvars,
                        found: p.nvars(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            nvars,
            entries,
        })
    }

    /// Constant polynomial matrix from a rational matrix.
    pub fn from_rational(m: &RatMatrix, nvars: usize) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols(), nvars);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, Polynomial::constant(nvars, m.get(i, j).clone()));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert_eq!(p.nvars(), self.nvars, "entry variable count mismatch");
        self.entries[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Polynomial> {
        self.entries.iter()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = Self::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }

    pub fn neg(&self) -> PolyMatrix {
        self.map(|p| -p)
    }

    pub fn checked_add(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(PolyError::Shape("matrix sum shape mismatch".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<_, _>>()?;
        Ok(PolyMatrix {
            entries,
            ..self.clone()
        })
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, PolyError> {
        if self.cols != other.rows {
            return Err(PolyError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.nvars != other.nvars {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols, self.nvars);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(self.nvars);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>, PolyError> {
        if v.len() != self.cols {
            return Err(PolyError::Shape("vector length mismatch".into()));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).fold(Polynomial::zero(self.nvars), |acc, k| &acc + &(self.get(i, k) * &v[k])))
            .collect())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_constant() && e.constant_term().is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i..self.cols).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Maximum entry degree (−1 for the zero matrix).
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(Polynomial::degree).max().unwrap_or(-1)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<RatMatrix, PolyError> {
        let mut out = RatMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).eval(point)?);
            }
        }
        Ok(out)
    }

    fn require_square(&self) -> Result<(), PolyError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(PolyError::Shape(format!(
                "square matrix required, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination with row pivoting.
    pub fn det_bareiss(&self) -> Result<Polynomial, PolyError> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(self.nvars));
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| self.row(i)).collect();
        let mut sign_flip = false;
        let mut prev = Polynomial::one(self.nvars);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(Polynomial::zero(self.nvars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss quotient is exact over an integral domain");
                }
                a[i][k] = Polynomial::zero(self.nvars);
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        Ok(if sign_flip { -det } else { det })
    }

    /// Determinant by Laplace expansion along the first row.
    pub fn det_laplace(&self) -> Result<Polynomial, PolyError> {
        self.require_square()?;
        Ok(laplace(
            &(0..self.rows).map(|i| self.row(i)).collect::<Vec<_>>(),
            self.nvars,
        ))
    }

    pub fn det(&self) -> Result<Polynomial, PolyError> {
        if self.rows <= 8 {
            self.det_bareiss()
        } else {
            self.det_laplace()
        }
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let rows = (0..self.rows)
            .filter(|&i| i != skip_row)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != skip_col)
                    .map(|j| self.get(i, j).clone())
                    .collect()
            })
            .collect::<Vec<Vec<_>>>();
        let mut m = PolyMatrix::from_rows(rows).expect("minor of a rectangular matrix");
        m.nvars = self.nvars;
        m
    }

    /// Determinant and adjugate (transposed cofactor matrix), so that
    /// `M · adj(M) = det(M) · I`.
    pub fn det_adjugate(&self) -> Result<(Polynomial, PolyMatrix), PolyError> {
        self.require_square()?;
        let n = self.rows;
        let det = self.det()?;
        let mut adj = Self::zeros(n, n, self.nvars);
        if n == 1 {
            adj.set(0, 0, Polynomial::one(self.nvars));
            return Ok((det, adj));
        }
        for i in 0..n {
            for j in 0..n {
                let cof = self.minor(i, j).det()?;
                let cof = if (i + j) % 2 == 1 { -cof } else { cof };
                adj.set(j, i, cof);
            }
        }
        Ok((det, adj))
    }
}

fn laplace(a: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = a.len();
    match n {
        0 => Polynomial::one(nvars),
        1 => a[0][0].clone(),
        _ => {
            let mut acc = Polynomial::zero(nvars);
            for (j, lead) in a[0].iter().enumerate() {
                if lead.is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = lead * &laplace(&sub, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

impl PolyMatrix {
    /// Canonical text rows, one string per entry.
    pub fn to_text_rows<S: AsRef<str>>(&self, names: &[S]) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_text(names)).collect())
            .collect()
    }

    /// LaTeX `pmatrix` rendering.
    pub fn to_latex<S: AsRef<str>>(&self, names: &[S]) -> String {
        let body: Vec<String> = self
            .to_text_rows(names)
            .into_iter()
            .map(|r| r.join(" & ").replace('*', " "))
            .collect();
        format!("\\begin{{pmatrix}} {} \\end{{pmatrix}}", body.join(" \\\\ "))
    }

    pub fn constant_part(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).constant_term());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }
}

impl Default for PolyMatrix {
    fn default() -> Self {
        Self::zeros(0, 0, 0)
    }
}
