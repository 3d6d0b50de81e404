//! Reader for the canonical multivector and form text, the inverse of
//! `Alternating::to_text`.

use super::{Alternating, Slot, TensorError};
use crate::polycore::Polynomial;

/// Splits at top-level `+`/`-`, keeping each term's sign.
fn signed_terms(text: &str) -> Vec<(bool, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let piece = text[start..i].trim();
                if !piece.is_empty() {
                    out.push((neg, piece));
                }
                neg = c == '-';
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((neg, text[start..].trim()));
    out
}

/// Splits at the last top-level `*`.
fn split_last_factor(term: &str) -> (&str, &str) {
    let mut depth = 0i32;
    let mut cut = None;
    for (i, c) in term.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => cut = Some(i),
            _ => {}
        }
    }
    match cut {
        Some(i) => (&term[..i], &term[i + 1..]),
        None => ("", term),
    }
}

impl<K: Slot> Alternating<K> {
    /// Parses canonical text such as `-dX^dY + Z*dX^dZ` over the given chart
    /// names. `arity` is needed to read `0`.
    pub fn parse<S: AsRef<str>>(text: &str, names: &[S], arity: usize) -> Result<Self, TensorError> {
        let n = names.len();
        let err = |message: &str| TensorError::Parse {
            text: text.to_string(),
            message: message.to_string(),
        };
        let mut out = Self::zero(n, arity);
        if text.trim() == "0" {
            return Ok(out);
        }
        for (neg, term) in signed_terms(text) {
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (coeff, basis) = if arity == 0 {
                (term, "")
            } else {
                split_last_factor(term)
            };
            let mut idx = Vec::with_capacity(arity);
            if arity > 0 {
                for factor in basis.split('^') {
                    let name = factor
                        .trim()
                        .strip_prefix(K::SYMBOL)
                        .ok_or_else(|| err("basis element without its symbol"))?;
                    let i = names
                        .iter()
                        .position(|s| s.as_ref() == name)
                        .ok_or_else(|| err("unknown chart name"))?;
                    idx.push(i);
                }
                if idx.len() != arity {
                    return Err(err("wrong number of basis factors"));
                }
            }
            let mut c = if coeff.is_empty() {
                Polynomial::one(n)
            } else {
                Polynomial::parse(coeff, names)?
            };
            if neg {
                c = -c;
            }
            out.add_component(&idx, c)?;
        }
        Ok(out)
    }
}
