//! Parser for the polynomial text grammar.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*      '/' only by a nonzero constant
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! ```
//!
//! Every string produced by [`Polynomial::to_text`] parses back to the same
//! polynomial.

use num_bigint::BigInt;

use super::polynomial::Polynomial;
use super::rational::Rational;
use super::PolyError;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, PolyError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                let tok = match c {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '/' => Token::Slash,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    _ => Token::RParen,
                };
                out.push((pos, tok));
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Token::Num(s.parse().expect("digits parse"))));
            }
            c if c.is_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Token::Ident(s)));
            }
            other => {
                return Err(PolyError::Parse {
                    position: pos,
                    message: format!("unexpected character '{other}'"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a, S: AsRef<str>> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    names: &'a [S],
    end: usize,
}

impl<S: AsRef<str>> Parser<'_, S> {
    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Parse {
            position: self.here(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.err("division only by a nonzero constant"));
                    }
                    let inv = Rational::from_integer(1.into()) / d.constant_term();
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(Polynomial::constant(self.nvars(), Rational::from_integer(n)))
            }
            Some(Token::Ident(name)) => {
                let k = self
                    .names
                    .iter()
                    .position(|s| s.as_ref() == name)
                    .ok_or_else(|| self.err(format!("unknown variable '{name}'")))?;
                self.pos += 1;
                Ok(Polynomial::var(self.nvars(), k))
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.err("unexpected token")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl Polynomial {
    /// Parses polynomial text over the given variable names.
    pub fn parse<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Polynomial, PolyError> {
        let tokens = tokenize(text)?;
        if tokens.is_empty() {
            return Err(PolyError::Parse {
                position: 0,
                message: "empty polynomial".into(),
            });
        }
        let mut p = Parser {
            tokens,
            pos: 0,
            names,
            end: text.len(),
        };
        let out = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rational::{rat, ratio};

    const NAMES: [&str; 4] = ["X", "Y", "Z", "T"];

    #[test]
    fn parses_canonical_forms() {
        let p = Polynomial::parse("-1/2*X^2 + X*Z", &NAMES).unwrap();
        assert_eq!(p.coeff(&[2, 0, 0, 0]), ratio(-1, 2));
        assert_eq!(p.coeff(&[1, 0, 1, 0]), rat(1));
        assert_eq!(p.to_text(&NAMES), "-1/2*X^2 + X*Z");
    }

    #[test]
    fn parses_general_expressions() {
        let p = Polynomial::parse("(Y + 1)^2 - 2*Y", &NAMES).unwrap();
        assert_eq!(p.to_text(&NAMES), "Y^2 + 1");
        let q = Polynomial::parse("- -T / 3", &NAMES).unwrap();
        assert_eq!(q.to_text(&NAMES), "1/3*T");
    }

    #[test]
    fn reports_errors() {
        assert!(Polynomial::parse("W + 1", &NAMES).is_err());
        assert!(Polynomial::parse("X / Y", &NAMES).is_err());
        assert!(Polynomial::parse("X / 0", &NAMES).is_err());
        assert!(Polynomial::parse("X +", &NAMES).is_err());
        assert!(Polynomial::parse("(X", &NAMES).is_err());
        assert!(Polynomial::parse("X ^ Y", &NAMES).is_err());
        assert!(Polynomial::parse("", &NAMES).is_err());
        assert!(Polynomial::parse("X $ Y", &NAMES).is_err());
    }
}
