//! Text, LaTeX and JSON rendering of reports.

use serde_json::{json, Value};

use super::Format;
use crate::polycore::PolyMatrix;
use crate::tensorcalc::{Alternating, PolyForm, PolyMultiVector, PolyTensor, Slot};

pub(super) fn json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

pub(super) fn matrix_json(m: &PolyMatrix, names: &[String]) -> Value {
    json!(m.to_text_rows(names))
}

/// A tensor prepared for output.
pub(super) struct TensorView {
    pub text: String,
    pub latex: String,
    pub degree: i64,
    /// 1-based index lists with coefficient text.
    pub components: Vec<(Vec<usize>, String)>,
}

impl TensorView {
    fn new<K: Slot>(t: &Alternating<K>, names: &[String], latex_symbol: &str) -> TensorView
    where
        Alternating<K>: PolyTensor,
    {
        let components: Vec<(Vec<usize>, String)> = t
            .components()
            .map(|(k, p)| (k.iter().map(|i| i + 1).collect(), p.to_text(names)))
            .collect();
        let mut latex = String::new();
        for (n, (k, p)) in t.components().enumerate() {
            let basis = k
                .iter()
                .map(|&i| format!("{latex_symbol}{{{}}}", names[i]))
                .collect::<Vec<_>>()
                .join(" \\wedge ");
            let text = p.to_text(names).replace('*', " ");
            let coeff = if p.num_terms() > 1 {
                format!("+ ({text}) \\, ")
            } else if text == "1" {
                "+ ".to_string()
            } else if text == "-1" {
                "- ".to_string()
            } else if let Some(rest) = text.strip_prefix('-') {
                format!("- {rest} \\, ")
            } else {
                format!("+ {text} \\, ")
            };
            let coeff = if n == 0 {
                coeff
                    .strip_prefix("+ ")
                    .map(str::to_string)
                    .unwrap_or_else(|| coeff.replacen("- ", "-", 1))
            } else {
                coeff
            };
            if n > 0 {
                latex.push(' ');
            }
            latex.push_str(&coeff);
            latex.push_str(&basis);
        }
        if latex.is_empty() {
            latex.push('0');
        }
        TensorView {
            text: t.to_text(names),
            latex,
            degree: t.max_degree(),
            components,
        }
    }

    pub fn multi(t: &PolyMultiVector, names: &[String]) -> TensorView {
        TensorView::new(t, names, "\\partial_")
    }

    pub fn form(t: &PolyForm, names: &[String]) -> TensorView {
        TensorView::new(t, names, "\\mathrm{d}")
    }

    pub fn json(&self) -> Value {
        json!({
            "text": self.text,
            "degree": self.degree,
            "components": self
                .components
                .iter()
                .map(|(k, c)| json!({"index": k, "coefficient": c}))
                .collect::<Vec<_>>(),
        })
    }
}

fn latex_label(label: &str) -> String {
    match label {
        "pi+" => "\\pi^+".into(),
        "omega+" => "\\omega^+".into(),
        "top power of omega+" => "(\\omega^+)^{\\wedge n/2}".into(),
        "adj P" => "\\operatorname{adj} P".into(),
        other => format!("\\text{{{other}}}"),
    }
}

/// Line-oriented report builder.
#[derive(Default)]
pub(super) struct Doc {
    lines: Vec<String>,
}

impl Doc {
    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn matrix(&mut self, format: Format, name: &str, m: &PolyMatrix, names: &[String]) {
        if format == Format::Latex {
            let label = if name.len() == 1 {
                name.to_string()
            } else {
                latex_label(name)
            };
            self.line(format!("\\[ {label} = {} \\]", m.to_latex(names)));
            return;
        }
        let rows = m.to_text_rows(names);
        let cols = m.cols();
        let width: Vec<usize> = (0..cols)
            .map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
            .collect();
        self.line(format!("{name} ="));
        for r in rows {
            let cells: Vec<String> = r.iter().zip(&width).map(|(c, w)| format!("{c:>w$}", w = *w)).collect();
            self.line(format!("  [{}]", cells.join("  ")));
        }
    }

    pub fn tensor(&mut self, format: Format, label: &str, t: &TensorView) {
        if format == Format::Latex {
            self.line(format!("\\[ {} = {} \\]", latex_label(label), t.latex));
        } else {
            self.line(format!("{label} = {}", t.text));
        }
    }

    pub fn finish(self) -> String {
        self.lines.join("\n")
    }
}
