//! Text grammar for polynomials in `X`:
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | 'X' | '(' expr ')'
//! rational := '-'? digits ('/' digits)?
//! ```
//!
//! Whitespace is ignored everywhere.

use num::{BigInt, Zero};
use thiserror::Error;

use super::Poly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial syntax error at position {position}: {message}")]
pub struct PolyParseError {
    pub position: usize,
    pub message: String,
}

pub fn parse_poly(text: &str) -> Result<Poly, PolyParseError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser {
        chars,
        pos: 0,
        end: text.len(),
    };
    let p = parser.expr()?;
    if parser.pos < parser.chars.len() {
        return Err(parser.error(format!("unexpected '{}'", parser.chars[parser.pos].1)));
    }
    Ok(p)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> PolyParseError {
        PolyParseError {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.term()?;
        while let Some(op) = self.peek().filter(|c| *c == '+' || *c == '-') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, PolyParseError> {
        let base = self.base()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("exponent must be a nonnegative integer"));
        }
        let digits = self.digits();
        let e: u32 = digits
            .parse()
            .map_err(|_| self.error("exponent out of range"))?;
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn base(&mut self) -> Result<Poly, PolyParseError> {
        match self.peek() {
            Some('X') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c == '-' || c.is_ascii_digit() => self.rational().map(Poly::constant),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn rational(&mut self) -> Result<Rational, PolyParseError> {
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("expected digits"));
        }
        let numer: BigInt = self.digits().parse().expect("digit string");
        let denom: BigInt = if self.peek() == Some('/') {
            self.pos += 1;
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                return Err(self.error("expected digits after '/'"));
            }
            let d: BigInt = self.digits().parse().expect("digit string");
            if d.is_zero() {
                return Err(self.error("zero denominator"));
            }
            d
        } else {
            BigInt::from(1)
        };
        let r = Rational::new(numer, denom);
        Ok(if neg { -r } else { r })
    }
}
