//! Independent group-coordinate descriptions of catalog entries.
//!
//! Each pack gives a symplectic form and invariant fields in ordinary
//! group coordinates together with the polynomial change of variables to
//! the chart. Evaluating the pushed-forward data at a point gives numbers
//! that never pass through the chart construction.

use crate::polycore::{PolyError, PolyMatrix, Polynomial, RatMatrix, Rational};

use super::data::RawOracle;
use super::CatalogError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OraclePack {
    pub group_names: Vec<String>,
    /// Chart coordinates in terms of group coordinates.
    pub chart_map: Vec<Polynomial>,
    /// Group coordinates in terms of chart coordinates.
    pub inverse_map: Vec<Polynomial>,
    /// `ω⁺` in group coordinates as an antisymmetric matrix.
    pub group_form: PolyMatrix,
    /// Row `i` holds the group components of `e_i⁻`.
    pub right_fields: Vec<Vec<Polynomial>>,
    pub left_fields: Option<Vec<Vec<Polynomial>>>,
    pub note: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleTensor {
    /// `{x_i, x_j}`.
    Poisson,
    /// Matrix of `ω⁺` in chart coordinates.
    Symplectic,
    /// Chart components of `e_i⁻` in column `i`.
    RightFields,
    /// Chart components of `e_i⁺` in column `i`.
    LeftFields,
}

fn parse_all(texts: &[&str], names: &[String]) -> Result<Vec<Polynomial>, PolyError> {
    texts.iter().map(|t| Polynomial::parse(t, names)).collect()
}

impl OraclePack {
    pub(super) fn from_raw(raw: &RawOracle, chart_names: &[String]) -> Result<OraclePack, CatalogError> {
        let group_names: Vec<String> = raw.group_names.iter().map(|s| s.to_string()).collect();
        let n = group_names.len();
        let mut group_form = PolyMatrix::zeros(n, n, n);
        for &(i, j, c) in raw.group_form {
            let p = Polynomial::parse(c, &group_names)?;
            group_form.set(j, i, -&p);
            group_form.set(i, j, p);
        }
        let fields = |rows: &[[&str; 4]; 4]| -> Result<Vec<Vec<Polynomial>>, PolyError> {
            rows.iter().map(|r| parse_all(r, &group_names)).collect()
        };
        Ok(OraclePack {
            chart_map: parse_all(&raw.chart_map, &group_names)?,
            inverse_map: parse_all(&raw.inverse_map, chart_names)?,
            right_fields: fields(&raw.right_fields)?,
            left_fields: raw.left_fields.as_ref().map(fields).transpose()?,
            group_form,
            group_names,
            note: raw.note,
        })
    }

    pub fn dim(&self) -> usize {
        self.group_names.len()
    }

    /// Jacobian `∂(chart)/∂(group)` as a polynomial matrix in group
    /// coordinates.
    pub fn jacobian(&self) -> PolyMatrix {
        let n = self.dim();
        let mut j = PolyMatrix::zeros(n, n, n);
        for (a, f) in self.chart_map.iter().enumerate() {
            for b in 0..n {
                j.set(a, b, f.d(b));
            }
        }
        j
    }

    /// Group point of a chart point.
    pub fn to_group(&self, chart_point: &[Rational]) -> Result<Vec<Rational>, PolyError> {
        self.inverse_map.iter().map(|p| p.eval(chart_point)).collect()
    }

    /// Chart point of a group point.
    pub fn to_chart(&self, group_point: &[Rational]) -> Result<Vec<Rational>, PolyError> {
        self.chart_map.iter().map(|p| p.eval(group_point)).collect()
    }
}

fn eval_rows(rows: &[Vec<Polynomial>], g: &[Rational]) -> Result<Vec<Vec<Rational>>, PolyError> {
    rows.iter().map(|r| r.iter().map(|p| p.eval(g)).collect()).collect()
}

/// Evaluates a tensor through the oracle at a chart point.
pub fn numeric_oracle(
    pack: &OraclePack,
    tensor: OracleTensor,
    chart_point: &[Rational],
) -> Result<RatMatrix, CatalogError> {
    let g = pack.to_group(chart_point)?;
    let jac = pack.jacobian().eval(&g)?;
    let omega = pack.group_form.eval(&g)?;
    let push = |rows: &[Vec<Polynomial>]| -> Result<RatMatrix, CatalogError> {
        // columns are pushed-forward fields
        let v = RatMatrix::from_rows(eval_rows(rows, &g)?).transpose();
        Ok(jac.mul(&v))
    };
    match tensor {
        OracleTensor::Poisson => {
            let v = RatMatrix::from_rows(eval_rows(&pack.right_fields, &g)?);
            Ok(v.mul(&omega).mul(&v.transpose()))
        }
        OracleTensor::Symplectic => {
            let inv = jac.inverse().ok_or(CatalogError::Singular)?;
            Ok(inv.transpose().mul(&omega).mul(&inv).neg())
        }
        OracleTensor::RightFields => push(&pack.right_fields),
        OracleTensor::LeftFields => match &pack.left_fields {
            Some(rows) => push(rows),
            None => Err(CatalogError::NoOracleTensor("left fields")),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::super::{ids, load};
    use super::*;
    use crate::affinechart::polynomial_s;
    use crate::polycore::ratio;

    fn points() -> Vec<Vec<Rational>> {
        vec![
            vec![ratio(0, 1); 4],
            vec![ratio(1, 2), ratio(-3, 1), ratio(2, 3), ratio(5, 1)],
            vec![ratio(-7, 4), ratio(1, 1), ratio(-2, 1), ratio(1, 3)],
        ]
    }

    #[test]
    fn maps_are_inverse() {
        for id in ids() {
            let Some(o) = load(id).unwrap().oracle else { continue };
            for x in points() {
                assert_eq!(o.to_chart(&o.to_group(&x).unwrap()).unwrap(), x, "{id}");
            }
        }
    }

    #[test]
    fn oracle_matches_chart() {
        for id in ["g1", "g2", "g3", "g4"] {
            let e = load(id).unwrap();
            let m = e.chart().unwrap();
            let o = e.oracle.as_ref().unwrap();
            let s = polynomial_s(&m).unwrap();
            for x in points() {
                let p = m.poisson_matrix().eval(&x).unwrap();
                assert_eq!(numeric_oracle(o, OracleTensor::Poisson, &x).unwrap(), p, "{id} P");
                assert_eq!(numeric_oracle(o, OracleTensor::RightFields, &x).unwrap(), p, "{id} u-");
                assert_eq!(
                    numeric_oracle(o, OracleTensor::Symplectic, &x).unwrap(),
                    s.eval(&x).unwrap(),
                    "{id} S"
                );
            }
        }
    }

    #[test]
    fn left_fields_match_solver() {
        use crate::leftinvariant::left_invariant_field;
        for id in ["g1", "g4"] {
            let e = load(id).unwrap();
            let m = e.chart().unwrap();
            let o = e.oracle.as_ref().unwrap();
            let cols: Vec<Vec<Polynomial>> = (0..4)
                .map(|i| {
                    let mut u = vec![ratio(0, 1); 4];
                    u[i] = ratio(1, 1);
                    left_invariant_field(&m, &u).unwrap().field.components().to_vec()
                })
                .collect();
            for x in points() {
                let num = numeric_oracle(o, OracleTensor::LeftFields, &x).unwrap();
                for (j, col) in cols.iter().enumerate() {
                    for (i, f) in col.iter().enumerate() {
                        assert_eq!(&f.eval(&x).unwrap(), num.get(i, j), "{id} e{}+", j + 1);
                    }
                }
            }
        }
    }
}
