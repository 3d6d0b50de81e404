//! Command-line frontend.
//!
//! Exit codes: 0 success, 2 structural failure or golden mismatch, 3 parse
//! failure or unknown catalog id, 4 left-invariant request on a
//! non-nilpotent algebra. Reports go to standard output and diagnostics to
//! standard error.

mod input;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::affinechart::{
    bracket_degree_dichotomy, build_chart, degree_table, poisson_bracket, right_invariant_field, right_multivector,
    symplectic_form, symplectic_matrix, volume_check, volume_form, ChartError, ChartModel, SymplecticMatrix,
};
use crate::catalog::{self, golden_compare, ChartTables, TableDiff};
use crate::generate::random_nilpotent_pair;
use crate::leftinvariant::{left_invariant_field, left_multivector};
use crate::liealgebra::{lower_central_series, AlgebraReport, ConstMultiVector, Violation};
use crate::polycore::{default_names, parse_rational, Polynomial, Rational};

pub use input::{AlgebraFile, AlgebraInput, BracketEntry, InputError, OmegaEntry, OmegaSpec};
use render::{matrix_json, Doc, TensorView};

pub const EXIT_OK: i32 = 0;
pub const EXIT_STRUCTURAL: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_NOT_NILPOTENT: i32 = 4;

/// Marker printed when `P(x)` has no polynomial inverse.
pub const NON_UNIMODULAR_MARKER: &str = "non-polynomial inverse (non-unimodular)";

#[derive(Parser, Debug)]
#[command(
    name = "sympoly",
    version,
    about = "Exact affine-chart models of symplectic Lie groups"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check Jacobi, the cocycle identity, non-degeneracy and CYBE.
    Validate {
        /// Algebra file, or a catalog id.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the chart and print its tensors. With no section flags every
    /// section is printed.
    Chart {
        /// Algebra file, or a catalog id.
        input: String,
        /// P and the Poisson bivector.
        #[arg(long)]
        poisson: bool,
        /// S = P⁻¹ and the symplectic 2-form.
        #[arg(long)]
        symplectic: bool,
        /// det P, adj P and the top power of the 2-form.
        #[arg(long)]
        volume: bool,
        /// Observed polynomial degrees against their bounds.
        #[arg(long)]
        degrees: bool,
        /// Comma-separated chart variable names.
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Right- or left-invariant fields and multivectors.
    Fields {
        /// Algebra file, or a catalog id.
        input: String,
        #[arg(long, value_enum, default_value_t = Side::Right)]
        side: Side,
        /// Components of a vector of the algebra, e.g. "1,0,-1/2,0".
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["basis", "multi"])]
        vector: Option<String>,
        /// One field per basis vector (the default).
        #[arg(long)]
        basis: bool,
        /// 1-based basis indices of a wedge, e.g. "1,2".
        #[arg(long, conflicts_with = "basis")]
        multi: Option<String>,
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Poisson bracket of two chart polynomials.
    Bracket {
        /// Algebra file, or a catalog id.
        input: String,
        /// First polynomial, e.g. "x1^2 - 1/2*x3".
        #[arg(short = 'f', allow_hyphen_values = true)]
        f: String,
        /// Second polynomial.
        #[arg(short = 'g', allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
    },
    /// Built-in groups; lists them when no id is given.
    Catalog {
        id: Option<String>,
        /// Run the full pipeline and compare against the stored tables.
        #[arg(long, conflicts_with = "export")]
        golden: bool,
        /// Print the entry as an algebra file.
        #[arg(long)]
        export: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a seeded random nilpotent symplectic algebra file.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Even dimension of the algebra.
        #[arg(long, default_value_t = 4)]
        dim: usize,
    },
}

/// Why a command stopped early.
#[derive(Debug)]
enum Failure {
    Parse(String),
    Structural(String),
    NotNilpotent(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Structural(_) => EXIT_STRUCTURAL,
            Failure::NotNilpotent(_) => EXIT_NOT_NILPOTENT,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Structural(m) | Failure::NotNilpotent(m) => m,
        }
    }
}

impl From<ChartError> for Failure {
    fn from(e: ChartError) -> Self {
        match e {
            ChartError::NotNilpotent(v) => Failure::NotNilpotent(not_nilpotent_message(&v)),
            other => Failure::Structural(other.to_string()),
        }
    }
}

fn not_nilpotent_message(v: &Violation) -> String {
    format!("left-invariant fields need a nilpotent algebra: {v}")
}

/// Output of a successful command: report text and exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            if !o.text.ends_with('\n') {
                let _ = out.write_all(b"\n");
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Validate { input, format } => cmd_validate(&load_input(&input)?, format),
        Command::Chart {
            input,
            poisson,
            symplectic,
            volume,
            degrees,
            names,
            format,
        } => {
            let all = !(poisson || symplectic || volume || degrees);
            let sections = Sections {
                poisson: all || poisson,
                symplectic: all || symplectic,
                volume: all || volume,
                degrees: all || degrees,
            };
            let model = build_model(&load_input(&input)?, names)?;
            cmd_chart(&model, sections, format)
        }
        Command::Fields {
            input,
            side,
            vector,
            basis: _,
            multi,
            names,
            format,
        } => {
            let model = build_model(&load_input(&input)?, names)?;
            let request = match (vector, multi) {
                (Some(v), _) => FieldRequest::Vector(parse_vector(&v, model.dim())?),
                (None, Some(m)) => FieldRequest::Multi(parse_indices(&m, model.dim())?),
                (None, None) => FieldRequest::Basis,
            };
            cmd_fields(&model, side, request, format)
        }
        Command::Bracket { input, f, g, names } => {
            let model = build_model(&load_input(&input)?, names)?;
            cmd_bracket(&model, &f, &g)
        }
        Command::Catalog {
            id,
            golden,
            export,
            format,
        } => match id {
            None => Ok(Outcome::ok(catalog_list(format))),
            Some(id) => {
                let entry = catalog::load(&id).map_err(|e| Failure::Parse(e.to_string()))?;
                if export {
                    Ok(Outcome::ok(AlgebraFile::from_entry(&entry).to_json()))
                } else if golden {
                    cmd_golden(&entry, format)
                } else {
                    Ok(Outcome::ok(catalog_show(&entry, format)))
                }
            }
        },
        Command::Random { seed, dim } => {
            if dim < 2 || dim % 2 == 1 {
                return Err(Failure::Parse(format!(
                    "--dim must be even and at least 2, found {dim}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (c, w) = random_nilpotent_pair(dim, &mut rng);
            Ok(Outcome::ok(AlgebraFile::from_pair(&c, &w).to_json()))
        }
    }
}

/// Reads an algebra file; a catalog id that is not an existing path is
/// taken as that entry's export.
fn load_input(arg: &str) -> Result<AlgebraInput, Failure> {
    let path = Path::new(arg);
    let file = if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{arg}: {e}")))?;
        AlgebraFile::from_json(&text).map_err(|e| Failure::Parse(format!("{arg}: {e}")))?
    } else if let Ok(entry) = catalog::load(arg) {
        AlgebraFile::from_entry(&entry)
    } else {
        return Err(Failure::Parse(format!(
            "{arg}: no such file or catalog id (known ids: {})",
            catalog::ids().join(", ")
        )));
    };
    file.resolve().map_err(|e| Failure::Parse(format!("{arg}: {e}")))
}

fn build_model(input: &AlgebraInput, names: Option<Vec<String>>) -> Result<ChartModel, Failure> {
    let m = build_chart(&input.algebra, &input.omega)?;
    match names.or_else(|| input.chart_names.clone()) {
        Some(n) => m.with_names(n).map_err(|e| Failure::Parse(e.to_string())),
        None => Ok(m),
    }
}

fn parse_vector(text: &str, n: usize) -> Result<Vec<Rational>, Failure> {
    let v = text
        .split(',')
        .map(|s| parse_rational(s.trim()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Parse(format!("--vector: {e}")))?;
    if v.len() != n {
        return Err(Failure::Parse(format!(
            "--vector: expected {n} components, found {}",
            v.len()
        )));
    }
    Ok(v)
}

fn parse_indices(text: &str, n: usize) -> Result<Vec<usize>, Failure> {
    let idx = text
        .split(',')
        .map(|s| match s.trim().parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
            _ => Err(Failure::Parse(format!(
                "--multi: '{}' is not an index in 1..={n}",
                s.trim()
            ))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(idx)
}

fn verdict(r: &Result<(), Violation>) -> Value {
    match r {
        Ok(()) => json!({"pass": true}),
        Err(v) => json!({"pass": false, "witness": v.to_string()}),
    }
}

fn cmd_validate(input: &AlgebraInput, format: Format) -> Result<Outcome, Failure> {
    let r = AlgebraReport::new(&input.algebra, &input.omega);
    let code = if r.structural_ok() { EXIT_OK } else { EXIT_STRUCTURAL };
    let nilpotent = match &r.nilpotent {
        Some(Ok(k)) => json!({"nilpotent": true, "nilindex": k}),
        Some(Err(v)) => json!({"nilpotent": false, "witness": v.to_string()}),
        None => json!({"nilpotent": null}),
    };
    let cybe = match &r.cybe {
        Some(c) => verdict(c),
        None => json!({"pass": false, "witness": "omega is degenerate"}),
    };
    let report = json!({
        "dim": input.algebra.dim(),
        "jacobi": verdict(&r.jacobi),
        "cocycle": verdict(&r.cocycle),
        "nondegenerate": verdict(&r.nondegenerate),
        "cybe": cybe,
        "unimodular": r.is_unimodular(),
        "unimodular_witness": r.unimodular.as_ref().err().map(|v| v.to_string()),
        "nilpotency": nilpotent,
        "solvable": r.solvable,
        "structural_ok": r.structural_ok(),
    });
    let text = match format {
        Format::Json => render::json(&report),
        _ => {
            let mut d = Doc::default();
            let line = |d: &mut Doc, name: &str, v: &Value| match v["witness"].as_str() {
                Some(w) if v["pass"] == json!(false) => d.line(format!("{name}: FAIL ({w})")),
                _ => d.line(format!("{name}: pass")),
            };
            line(&mut d, "jacobi", &report["jacobi"]);
            line(&mut d, "cocycle", &report["cocycle"]);
            line(&mut d, "nondegenerate", &report["nondegenerate"]);
            line(&mut d, "cybe", &report["cybe"]);
            d.line(format!("unimodular: {}", r.is_unimodular()));
            match &r.nilpotent {
                Some(Ok(k)) => d.line(format!("nilpotent: {k}")),
                Some(Err(v)) => d.line(format!("nilpotent: no ({v})")),
                None => d.line("nilpotent: unknown (not a Lie algebra)"),
            }
            match r.solvable {
                Some(s) => d.line(format!("solvable: {s}")),
                None => d.line("solvable: unknown (not a Lie algebra)"),
            }
            d.finish()
        }
    };
    Ok(Outcome { text, code })
}

#[derive(Clone, Copy)]
struct Sections {
    poisson: bool,
    symplectic: bool,
    volume: bool,
    degrees: bool,
}

fn cmd_chart(m: &ChartModel, s: Sections, format: Format) -> Result<Outcome, Failure> {
    let names = m.names();
    let mut report = serde_json::Map::new();
    let mut doc = Doc::default();
    let mut code = EXIT_OK;
    report.insert("dim".into(), json!(m.dim()));
    report.insert("names".into(), json!(names));
    if s.poisson {
        let pi = TensorView::multi(&m.poisson_bivector(), names);
        report.insert(
            "poisson".into(),
            json!({"matrix": matrix_json(m.poisson_matrix(), names), "bivector": pi.json()}),
        );
        doc.matrix(format, "P", m.poisson_matrix(), names);
        doc.tensor(format, "pi+", &pi);
    }
    let sym = symplectic_matrix(m)?;
    if s.symplectic {
        match &sym {
            SymplecticMatrix::Polynomial { s: smat, det } => {
                let form = TensorView::form(&symplectic_form(m)?, names);
                report.insert(
                    "symplectic".into(),
                    json!({
                        "polynomial": true,
                        "det": crate::polycore::format_rational(det),
                        "matrix": matrix_json(smat, names),
                        "form": form.json(),
                    }),
                );
                doc.matrix(format, "S", smat, names);
                doc.tensor(format, "omega+", &form);
            }
            SymplecticMatrix::NonPolynomial { adjugate, det } => {
                report.insert(
                    "symplectic".into(),
                    json!({
                        "polynomial": false,
                        "marker": NON_UNIMODULAR_MARKER,
                        "det": det.to_text(names),
                        "adjugate": matrix_json(adjugate, names),
                    }),
                );
                doc.line(format!("S: {NON_UNIMODULAR_MARKER}"));
                doc.line(format!("det P = {}", det.to_text(names)));
                doc.matrix(format, "adj P", adjugate, names);
            }
        }
    }
    if s.volume {
        if m.dim() % 2 == 1 {
            return Err(ChartError::OddDimension(m.dim()).into());
        }
        let v = volume_check(m)?;
        let mut entry = json!({
            "det": v.det.to_text(names),
            "parallel": v.parallel,
            "wedge_parallel": v.wedge_parallel,
            "pfaffian_identity": v.pfaffian_identity,
        });
        doc.line(format!("det P = {}", v.det.to_text(names)));
        doc.line(format!("volume parallel: {}", v.parallel));
        doc.line(format!("top power parallel: {}", v.wedge_parallel));
        doc.line(format!("pfaffian identity: {}", v.pfaffian_identity));
        if sym.is_polynomial() {
            let top = TensorView::form(&volume_form(m)?, names);
            doc.tensor(format, "top power of omega+", &top);
            entry["form"] = top.json();
        }
        if !v.consistent() || !v.pfaffian_identity {
            code = EXIT_STRUCTURAL;
        }
        report.insert("volume".into(), entry);
    }
    if s.degrees {
        let table = degree_table(m)?;
        let dichotomy = bracket_degree_dichotomy(m);
        doc.line("degrees:");
        let mut rows = Vec::new();
        for r in &table {
            doc.line(format!(
                "  {:<22} bound {:>2}  observed {:>2}  {}",
                r.tensor,
                r.bound,
                r.observed,
                if r.pass() { "pass" } else { "FAIL" }
            ));
            rows.push(json!({"tensor": r.tensor, "bound": r.bound, "observed": r.observed, "pass": r.pass()}));
        }
        doc.line(format!(
            "  bracket dichotomy      {}",
            if dichotomy { "pass" } else { "FAIL" }
        ));
        if !dichotomy || table.iter().any(|r| !r.pass()) {
            code = EXIT_STRUCTURAL;
        }
        report.insert("degrees".into(), json!({"table": rows, "bracket_dichotomy": dichotomy}));
    }
    let text = match format {
        Format::Json => render::json(&Value::Object(report)),
        _ => doc.finish(),
    };
    Ok(Outcome { text, code })
}

enum FieldRequest {
    Basis,
    Vector(Vec<Rational>),
    Multi(Vec<usize>),
}

fn cmd_fields(m: &ChartModel, side: Side, req: FieldRequest, format: Format) -> Result<Outcome, Failure> {
    let names = m.names();
    let n = m.dim();
    if side == Side::Left {
        let series = lower_central_series(m.algebra());
        if !series.reaches_zero() {
            let dims: Vec<String> = series.dims().iter().map(usize::to_string).collect();
            return Err(Failure::NotNilpotent(format!(
                "left-invariant fields need a nilpotent algebra; lower central series dimensions {} never reach 0",
                dims.join(" > ")
            )));
        }
    }
    let unit = |i: usize| {
        let mut v = vec![Rational::from_integer(0.into()); n];
        v[i] = Rational::from_integer(1.into());
        v
    };
    let mut items: Vec<(String, TensorView, Option<usize>)> = Vec::new();
    let mut field = |label: String, u: &[Rational]| -> Result<(), Failure> {
        match side {
            Side::Right => {
                let f = right_invariant_field(m, u)?;
                items.push((label, TensorView::multi(&f.to_multivector(), names), None));
            }
            Side::Left => {
                let s = left_invariant_field(m, u)?;
                items.push((
                    label,
                    TensorView::multi(&s.field.to_multivector(), names),
                    Some(s.achieved_degree),
                ));
            }
        }
        Ok(())
    };
    let sign = if side == Side::Right { "-" } else { "+" };
    let basis_names = m.algebra().names().to_vec();
    match req {
        FieldRequest::Basis => {
            for (i, name) in basis_names.iter().enumerate() {
                field(format!("{name}{sign}"), &unit(i))?;
            }
        }
        FieldRequest::Vector(u) => {
            let label = format!("({}){sign}", ConstMultiVector::from_vector(&u).to_text(&basis_names));
            field(label, &u)?;
        }
        FieldRequest::Multi(idx) => {
            let w = ConstMultiVector::basis(n, &idx).map_err(|e| Failure::Parse(format!("--multi: {e}")))?;
            let t = match side {
                Side::Right => right_multivector(m, &w)?,
                Side::Left => left_multivector(m, &w)?,
            };
            items.push((
                format!("({}){sign}", w.to_text(&basis_names)),
                TensorView::multi(&t, names),
                None,
            ));
        }
    }
    let text = match format {
        Format::Json => {
            let list: Vec<Value> = items
                .iter()
                .map(|(label, t, achieved)| {
                    let mut v = t.json();
                    v["label"] = json!(label);
                    if let Some(a) = achieved {
                        v["achieved_degree"] = json!(a);
                    }
                    v
                })
                .collect();
            render::json(&json!({"side": if side == Side::Right { "right" } else { "left" }, "fields": list}))
        }
        _ => {
            let mut d = Doc::default();
            for (label, t, _) in &items {
                d.tensor(format, label, t);
                d.line(format!("  degree {}", t.degree));
            }
            d.finish()
        }
    };
    Ok(Outcome::ok(text))
}

fn cmd_bracket(m: &ChartModel, f: &str, g: &str) -> Result<Outcome, Failure> {
    let defaults = default_names(m.dim());
    // chart names first, then the default x1..xn
    let parse = |s: &str| -> Result<(Polynomial, bool), Failure> {
        match Polynomial::parse(s, m.names()) {
            Ok(p) => Ok((p, false)),
            Err(e) => match Polynomial::parse(s, &defaults) {
                Ok(p) if m.names() != defaults.as_slice() => Ok((p, true)),
                _ => Err(Failure::Parse(format!("'{s}': {e}"))),
            },
        }
    };
    let (pf, df) = parse(f)?;
    let (pg, dg) = parse(g)?;
    let names: &[String] = if df || dg { &defaults } else { m.names() };
    let b = poisson_bracket(m, &pf, &pg)?;
    Ok(Outcome::ok(b.to_text(names)))
}

fn catalog_list(format: Format) -> String {
    let entries: Vec<_> = catalog::ids()
        .into_iter()
        .map(|id| catalog::load(id).expect("known id"))
        .collect();
    match format {
        Format::Json => render::json(&Value::Array(
            entries.iter().map(|e| json!({"id": e.id, "title": e.title})).collect(),
        )),
        _ => entries
            .iter()
            .map(|e| format!("{:<5} {}", e.id, e.title))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn catalog_show(e: &catalog::CatalogEntry, format: Format) -> String {
    let r = AlgebraReport::new(&e.algebra, &e.omega);
    let file = serde_json::to_value(AlgebraFile::from_entry(e)).expect("serializable");
    match format {
        Format::Json => render::json(&json!({
            "id": e.id,
            "title": e.title,
            "algebra": file,
            "chart_names": e.chart_names,
            "unimodular": r.is_unimodular(),
            "nilindex": r.nilindex(),
            "solvable": r.solvable,
            "lattice_notes": e.lattice_notes,
            "oracle_note": e.oracle.as_ref().map(|o| o.note),
        })),
        _ => {
            let mut d = Doc::default();
            d.line(format!("{}: {}", e.id, e.title));
            let n = e.algebra.dim();
            let names = e.algebra.names();
            for (&(i, j), v) in e.algebra.brackets() {
                let rhs = ConstMultiVector::from_vector(v);
                if !rhs.is_zero() {
                    d.line(format!("  [{}, {}] = {}", names[i], names[j], rhs.to_text(names)));
                }
            }
            let mut omega = ConstMultiVector::zero(n, 2);
            for i in 0..n {
                for j in i + 1..n {
                    omega
                        .add_component(&[i, j], e.omega.get(i, j).clone())
                        .expect("in range");
                }
            }
            let dual: Vec<String> = names.iter().map(|s| format!("{s}*")).collect();
            d.line(format!("  omega = {}", omega.to_text(&dual)));
            d.line(format!("  unimodular: {}", r.is_unimodular()));
            match r.nilindex() {
                Some(k) => d.line(format!("  nilpotent: {k}")),
                None => d.line("  nilpotent: no"),
            }
            d.line(format!("  solvable: {}", r.solvable.unwrap_or(false)));
            d.line(format!("  lattices: {}", e.lattice_notes));
            if let Some(o) = &e.oracle {
                d.line(format!("  oracle: {}", o.note));
            }
            d.finish()
        }
    }
}

fn diff_json(d: &TableDiff) -> Value {
    json!({"table": d.table, "location": d.location, "expected": d.expected, "found": d.found})
}

fn cmd_golden(e: &catalog::CatalogEntry, format: Format) -> Result<Outcome, Failure> {
    let m = e.chart()?;
    if e.golden.is_none() {
        let marker = match symplectic_matrix(&m)? {
            SymplecticMatrix::NonPolynomial { det, .. } => {
                Some(format!("{NON_UNIMODULAR_MARKER}: det P = {}", det.to_text(m.names())))
            }
            SymplecticMatrix::Polynomial { .. } => None,
        };
        let text = match format {
            Format::Json => render::json(&json!({"id": e.id, "golden": null, "note": marker})),
            _ => format!(
                "{}: no stored tables{}",
                e.id,
                marker.map(|s| format!("; {s}")).unwrap_or_default()
            ),
        };
        return Ok(Outcome::ok(text));
    }
    let computed = ChartTables::from_model(&m)?;
    let report = golden_compare(e, &computed);
    let code = if report.is_empty() { EXIT_OK } else { EXIT_STRUCTURAL };
    let text = match format {
        Format::Json => render::json(&json!({
            "id": e.id,
            "match": report.is_empty(),
            "diffs": report.diffs.iter().map(diff_json).collect::<Vec<_>>(),
            "reference_table_discrepancies": report.printed_discrepancies.iter().map(diff_json).collect::<Vec<_>>(),
        })),
        _ => {
            let mut d = Doc::default();
            if report.is_empty() {
                d.line(format!("{}: golden tables match (P, S, pi+, omega+)", e.id));
            } else {
                d.line(format!("{}: {} golden mismatches", e.id, report.diffs.len()));
                for x in &report.diffs {
                    d.line(format!(
                        "  {} {}: expected {}, found {}",
                        x.table, x.location, x.expected, x.found
                    ));
                }
            }
            if !report.printed_discrepancies.is_empty() {
                d.line("note: reference-table discrepancy (computed value confirmed by the group-coordinate oracle)");
                for x in &report.printed_discrepancies {
                    d.line(format!(
                        "  {} {}: reference {}, computed {}",
                        x.table, x.location, x.expected, x.found
                    ));
                }
            }
            d.finish()
        }
    };
    Ok(Outcome { text, code })
}
