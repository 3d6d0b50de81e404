//! The JSON algebra file: 1-based indices, rationals as `"p"` or `"p/q"`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::catalog::CatalogEntry;
use crate::liealgebra::{StructureConstants, TwoCocycle};
use crate::polycore::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart_names: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    pub omega: OmegaSpec,
}

/// `[e_i, e_j] = Σ_k coeffs[k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OmegaSpec {
    Grid(Vec<Vec<String>>),
    Sparse(Vec<OmegaEntry>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OmegaEntry {
    pub i: usize,
    pub j: usize,
    pub value: String,
}

/// A semantic problem in an otherwise well-formed JSON file.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{field}: {message}")]
pub struct InputError {
    pub field: String,
    pub message: String,
}

fn fail<T>(field: impl Into<String>, message: impl Into<String>) -> Result<T, InputError> {
    Err(InputError {
        field: field.into(),
        message: message.into(),
    })
}

/// A parsed file, 0-based.
#[derive(Clone, Debug)]
pub struct AlgebraInput {
    pub algebra: StructureConstants,
    pub omega: TwoCocycle,
    pub chart_names: Option<Vec<String>>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<AlgebraFile, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid algebra file: {e}"))
    }

    fn index(&self, field: &str, v: usize) -> Result<usize, InputError> {
        if v == 0 || v > self.dim {
            return fail(field, format!("index {v} outside 1..={}", self.dim));
        }
        Ok(v - 1)
    }

    pub fn resolve(&self) -> Result<AlgebraInput, InputError> {
        let n = self.dim;
        let rational = |field: &str, s: &str| parse_rational(s).or_else(|e| fail(field, e.to_string()));

        let mut algebra = StructureConstants::abelian(n);
        if let Some(names) = &self.names {
            algebra = algebra
                .with_names(names.clone())
                .or_else(|e| fail("names", e.to_string()))?;
        }
        let mut seen = BTreeSet::new();
        for (b, entry) in self.brackets.iter().enumerate() {
            let field = format!("brackets[{b}]");
            let i = self.index(&format!("{field}.i"), entry.i)?;
            let j = self.index(&format!("{field}.j"), entry.j)?;
            if i >= j {
                return fail(field, format!("requires i < j, found i = {}, j = {}", entry.i, entry.j));
            }
            if !seen.insert((i, j)) {
                return fail(field, format!("duplicate bracket ({}, {})", entry.i, entry.j));
            }
            let mut coeffs = vec![Rational::zero(); n];
            for (k, v) in &entry.coeffs {
                let kf = format!("{field}.coeffs.{k}");
                let k: usize = k.parse().or_else(|_| fail(&kf, "key must be a positive integer"))?;
                let k = self.index(&kf, k)?;
                coeffs[k] = rational(&kf, v)?;
            }
            algebra
                .set_bracket(i, j, coeffs)
                .or_else(|e| fail(&field, e.to_string()))?;
        }

        let omega = match &self.omega {
            OmegaSpec::Grid(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return fail("omega", format!("grid must be {n}×{n}"));
                }
                let mut m = crate::polycore::RatMatrix::zeros(n, n);
                for (i, row) in rows.iter().enumerate() {
                    for (j, s) in row.iter().enumerate() {
                        m.set(i, j, rational(&format!("omega[{i}][{j}]"), s)?);
                    }
                }
                TwoCocycle::new(m).or_else(|e| fail("omega", e.to_string()))?
            }
            OmegaSpec::Sparse(entries) => {
                let mut pairs = Vec::with_capacity(entries.len());
                let mut seen = BTreeSet::new();
                for (w, e) in entries.iter().enumerate() {
                    let field = format!("omega[{w}]");
                    let i = self.index(&format!("{field}.i"), e.i)?;
                    let j = self.index(&format!("{field}.j"), e.j)?;
                    if i >= j {
                        return fail(field, format!("requires i < j, found i = {}, j = {}", e.i, e.j));
                    }
                    if !seen.insert((i, j)) {
                        return fail(field, format!("duplicate entry ({}, {})", e.i, e.j));
                    }
                    pairs.push((i, j, rational(&format!("{field}.value"), &e.value)?));
                }
                TwoCocycle::from_pairs(n, pairs).or_else(|e| fail("omega", e.to_string()))?
            }
        };

        if let Some(names) = &self.chart_names {
            if names.len() != n {
                return fail("chart_names", format!("expected {n} names, found {}", names.len()));
            }
        }
        Ok(AlgebraInput {
            algebra,
            omega,
            chart_names: self.chart_names.clone(),
        })
    }

    /// Sparse encoding of an algebra and cocycle. Chart names are left to
    /// the reader's default.
    pub fn from_pair(c: &StructureConstants, omega: &TwoCocycle) -> AlgebraFile {
        let n = c.dim();
        let brackets = c
            .brackets()
            .map(|(&(i, j), v)| BracketEntry {
                i: i + 1,
                j: j + 1,
                coeffs: v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| ((k + 1).to_string(), format_rational(x)))
                    .collect(),
            })
            .filter(|b| !b.coeffs.is_empty())
            .collect();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = omega.get(i, j);
                if !v.is_zero() {
                    entries.push(OmegaEntry {
                        i: i + 1,
                        j: j + 1,
                        value: format_rational(v),
                    });
                }
            }
        }
        AlgebraFile {
            dim: n,
            names: Some(c.names().to_vec()),
            chart_names: None,
            brackets,
            omega: OmegaSpec::Sparse(entries),
        }
    }

    pub fn from_entry(e: &CatalogEntry) -> AlgebraFile {
        AlgebraFile::from_pair(&e.algebra, &e.omega)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn export_round_trip() {
        for id in crate::catalog::ids() {
            let e = crate::catalog::load(id).unwrap();
            let file = AlgebraFile::from_entry(&e);
            let back = AlgebraFile::from_json(&file.to_json()).unwrap().resolve().unwrap();
            assert_eq!(back.algebra, e.algebra);
            assert_eq!(back.omega, e.omega);
        }
    }

    #[test]
    fn rejects_duplicates_and_order() {
        let dup = r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1"}}, {"i": 1, "j": 2, "coeffs": {"1": "1"}}],
                     "omega": [{"i": 1, "j": 2, "value": "1"}]}"#;
        let err = AlgebraFile::from_json(dup).unwrap().resolve().unwrap_err();
        assert_eq!(err.field, "brackets[1]");
        let order = r#"{"dim": 2, "omega": [{"i": 2, "j": 1, "value": "1"}]}"#;
        assert!(AlgebraFile::from_json(order).unwrap().resolve().is_err());
        let grid = r#"{"dim": 2, "omega": [["0", "1/2"], ["-1/2", "0"]]}"#;
        let ok = AlgebraFile::from_json(grid).unwrap().resolve().unwrap();
        assert_eq!(ok.omega.get(0, 1), &crate::polycore::ratio(1, 2));
        let bad = r#"{"dim": 2, "omega": [["0", "x"], ["-1", "0"]]}"#;
        let err = AlgebraFile::from_json(bad).unwrap().resolve().unwrap_err();
        assert_eq!(err.field, "omega[0][1]");
    }
}
