//! Built-in four-dimensional symplectic Lie groups with their chart
//! tables, group-coordinate oracles, and the non-unimodular `aff2`
//! counterexample.

mod data;
mod oracle;

use thiserror::Error;

use crate::affinechart::{build_chart, symplectic_form, symplectic_matrix, ChartError, ChartModel, SymplecticMatrix};
use crate::liealgebra::{StructureConstants, TwoCocycle};
use crate::polycore::{rat, PolyError, PolyMatrix, Polynomial};
use crate::tensorcalc::{Alternating, PolyForm, PolyMultiVector, Slot, TensorError};

pub use oracle::{numeric_oracle, OraclePack, OracleTensor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog id '{0}' (known: g1, g2, g3, g4, aff2)")]
    UnknownId(String),
    #[error("catalog entry '{0}' has no group-coordinate oracle")]
    NoOracle(String),
    #[error("oracle has no data for {0}")]
    NoOracleTensor(&'static str),
    #[error(transparent)]
    Chart(#[from] ChartError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("chart map is singular at the requested point")]
    Singular,
}

/// Chart tables in canonical text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartTables {
    pub p: Vec<Vec<String>>,
    pub s: Vec<Vec<String>>,
    pub poisson: String,
    pub symplectic: String,
}

impl ChartTables {
    /// Renders `P`, `S`, `π⁺` and the symplectic form of a unimodular model.
    pub fn from_model(m: &ChartModel) -> Result<ChartTables, ChartError> {
        let names = m.names();
        let s = match symplectic_matrix(m)? {
            SymplecticMatrix::Polynomial { s, .. } => s,
            SymplecticMatrix::NonPolynomial { det, .. } => {
                return Err(ChartError::NonUnimodular {
                    det: det.to_text(names),
                })
            }
        };
        Ok(ChartTables {
            p: m.poisson_matrix().to_text_rows(names),
            s: s.to_text_rows(names),
            poisson: m.poisson_bivector().to_text(names),
            symplectic: symplectic_form(m)?.to_text(names),
        })
    }

    fn from_raw(raw: &data::RawTables) -> ChartTables {
        let grid = |g: &[[&str; 4]; 4]| g.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
        ChartTables {
            p: grid(&raw.p),
            s: grid(&raw.s),
            poisson: raw.poisson.to_string(),
            symplectic: raw.symplectic.to_string(),
        }
    }
}

/// Algebraic flags an entry is known to carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedFlags {
    pub unimodular: bool,
    pub nilindex: Option<usize>,
    pub solvable: bool,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub title: &'static str,
    pub algebra: StructureConstants,
    pub omega: TwoCocycle,
    pub chart_names: Vec<String>,
    /// Target tables, verified against the oracle.
    pub golden: Option<ChartTables>,
    /// Reference tables where they disagree with the target.
    pub printed: Option<ChartTables>,
    pub oracle: Option<OraclePack>,
    pub expected: ExpectedFlags,
    pub lattice_notes: &'static str,
}

/// Known ids in catalog order.
pub fn ids() -> Vec<&'static str> {
    data::ENTRIES.iter().map(|e| e.id).collect()
}

pub fn load(id: &str) -> Result<CatalogEntry, CatalogError> {
    let raw = data::ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| CatalogError::UnknownId(id.to_string()))?;
    let n = raw.dim;
    let mut algebra = StructureConstants::abelian(n);
    for &(a, b, k, c) in raw.brackets {
        algebra
            .set_coefficient(a - 1, b - 1, k - 1, rat(c))
            .expect("catalog brackets are in range");
    }
    let omega = TwoCocycle::from_pairs(
        n,
        raw.omega.iter().map(|&(a, b, c)| {
            if a < b {
                (a - 1, b - 1, rat(c))
            } else {
                (b - 1, a - 1, rat(-c))
            }
        }),
    )
    .expect("catalog cocycles are well formed");
    let chart_names: Vec<String> = raw.chart_names.iter().map(|s| s.to_string()).collect();
    let oracle = raw
        .oracle
        .as_ref()
        .map(|o| OraclePack::from_raw(o, &chart_names))
        .transpose()?;
    Ok(CatalogEntry {
        id: raw.id,
        title: raw.title,
        algebra,
        omega,
        golden: raw.golden.as_ref().map(ChartTables::from_raw),
        printed: raw.printed.as_ref().map(ChartTables::from_raw),
        chart_names,
        oracle,
        expected: ExpectedFlags {
            unimodular: raw.unimodular,
            nilindex: raw.nilindex,
            solvable: raw.solvable,
        },
        lattice_notes: raw.lattice_notes,
    })
}

impl CatalogEntry {
    /// The chart model with the entry's chart names.
    pub fn chart(&self) -> Result<ChartModel, ChartError> {
        build_chart(&self.algebra, &self.omega)?.with_names(self.chart_names.clone())
    }

    /// Golden `P` as a polynomial matrix.
    pub fn golden_p(&self) -> Option<Result<PolyMatrix, PolyError>> {
        self.golden.as_ref().map(|g| parse_grid(&g.p, &self.chart_names))
    }

    /// Golden `S` as a polynomial matrix.
    pub fn golden_s(&self) -> Option<Result<PolyMatrix, PolyError>> {
        self.golden.as_ref().map(|g| parse_grid(&g.s, &self.chart_names))
    }

    /// Golden `π⁺` and symplectic form, parsed.
    pub fn golden_tensors(&self) -> Option<Result<(PolyMultiVector, PolyForm), TensorError>> {
        self.golden.as_ref().map(|g| {
            Ok((
                PolyMultiVector::parse(&g.poisson, &self.chart_names, 2)?,
                PolyForm::parse(&g.symplectic, &self.chart_names, 2)?,
            ))
        })
    }
}

pub(crate) fn parse_grid(grid: &[Vec<String>], names: &[String]) -> Result<PolyMatrix, PolyError> {
    let rows = grid
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| Polynomial::parse(s, names))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    PolyMatrix::from_rows(rows)
}

/// One mismatch between two tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableDiff {
    /// `P`, `S`, `pi+` or `omega+`.
    pub table: &'static str,
    /// 1-based `(i,j)` for matrices, a basis element for tensors.
    pub location: String,
    pub expected: String,
    pub found: String,
}

/// Result of [`golden_compare`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffReport {
    /// Differences against the target tables; empty means a golden pass.
    pub diffs: Vec<TableDiff>,
    /// Where the computed tables differ from the reference tables, for
    /// entries that carry them.
    pub printed_discrepancies: Vec<TableDiff>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }
}

fn diff_grid(table: &'static str, expected: &[Vec<String>], found: &[Vec<String>], out: &mut Vec<TableDiff>) {
    let rows = expected.len().max(found.len());
    for i in 0..rows {
        let (er, fr) = (expected.get(i), found.get(i));
        let cols = er.map_or(0, Vec::len).max(fr.map_or(0, Vec::len));
        for j in 0..cols {
            let e = er.and_then(|r| r.get(j)).map_or("<missing>", String::as_str);
            let f = fr.and_then(|r| r.get(j)).map_or("<missing>", String::as_str);
            if e != f {
                out.push(TableDiff {
                    table,
                    location: format!("({},{})", i + 1, j + 1),
                    expected: e.to_string(),
                    found: f.to_string(),
                });
            }
        }
    }
}

fn diff_tensor<K: Slot>(table: &'static str, expected: &str, found: &str, names: &[String], out: &mut Vec<TableDiff>) {
    if expected == found {
        return;
    }
    let parsed =
        Alternating::<K>::parse(expected, names, 2).and_then(|e| Ok((e, Alternating::<K>::parse(found, names, 2)?)));
    let before = out.len();
    if let Ok((e, f)) = parsed {
        let mut keys: Vec<&Vec<usize>> = e.components().chain(f.components()).map(|(k, _)| k).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let (ec, fc) = (e.get(k), f.get(k));
            if ec != fc {
                out.push(TableDiff {
                    table,
                    location: k
                        .iter()
                        .map(|&i| format!("{}{}", K::SYMBOL, names[i]))
                        .collect::<Vec<_>>()
                        .join("^"),
                    expected: ec.to_text(names),
                    found: fc.to_text(names),
                });
            }
        }
    }
    if out.len() == before {
        out.push(TableDiff {
            table,
            location: "text".into(),
            expected: expected.to_string(),
            found: found.to_string(),
        });
    }
}

fn diff_tables(expected: &ChartTables, found: &ChartTables, names: &[String]) -> Vec<TableDiff> {
    let mut out = Vec::new();
    diff_grid("P", &expected.p, &found.p, &mut out);
    diff_grid("S", &expected.s, &found.s, &mut out);
    diff_tensor::<crate::tensorcalc::Vectors>("pi+", &expected.poisson, &found.poisson, names, &mut out);
    diff_tensor::<crate::tensorcalc::Covectors>("omega+", &expected.symplectic, &found.symplectic, names, &mut out);
    out
}

/// Canonical-text comparison of computed tables against the entry's
/// target, plus the list of disagreements with its reference tables.
pub fn golden_compare(entry: &CatalogEntry, computed: &ChartTables) -> DiffReport {
    let names = &entry.chart_names;
    DiffReport {
        diffs: entry
            .golden
            .as_ref()
            .map(|g| diff_tables(g, computed, names))
            .unwrap_or_default(),
        printed_discrepancies: entry
            .printed
            .as_ref()
            .map(|p| diff_tables(p, computed, names))
            .unwrap_or_default(),
    }
}
