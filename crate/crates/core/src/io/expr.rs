//! Polynomial expression grammar.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := uint ('/' uint)? | variable ('^' uint)? | '(' expr ')' ('^' uint)?
//! ```
//!
//! Whitespace is insignificant; implicit multiplication is rejected.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{PolyRing, Polynomial};

/// Parses `text` as a polynomial of `ring`. Errors carry 1-based columns.
pub fn parse_polynomial<F: Field>(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial<F>> {
    let mut p = Parser {
        ring,
        chars: text.char_indices().collect(),
        text,
        pos: 0,
    };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(e)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    chars: Vec<(usize, char)>,
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, what: &str) -> Error {
        let message = match self.chars.get(self.pos) {
            Some((_, c)) => format!("{what} `{c}`"),
            None => format!("{what}: unexpected end of input"),
        };
        Error::Syntax {
            line: 1,
            column: self.pos + 1,
            message,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<F: Field>(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(' => {
                Err(self.error("implicit multiplication is not allowed before"))
            }
            _ => Ok(acc),
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer, found"));
        }
        let s = self.slice(start, self.pos);
        Ok(s.parse().expect("digits"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat('^') {
            return Ok(1);
        }
        let at = self.pos;
        let e = self.uint()?;
        u32::try_from(e).map_err(|_| Error::Syntax {
            line: 1,
            column: at + 1,
            message: "exponent too large".into(),
        })
    }

    fn slice(&self, start: usize, end: usize) -> &'a str {
        let b0 = self.chars[start].0;
        let b1 = self.chars.get(end).map(|c| c.0).unwrap_or(self.text.len());
        &self.text[b0..b1]
    }

    fn factor<F: Field>(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`, found"));
                }
                Ok(e.pow(self.exponent()?))
            }
            Some(c) if c.is_ascii_digit() => {
                let at = self.pos;
                let num = self.uint()?;
                let den = if self.eat('/') { self.uint()? } else { BigInt::one() };
                let c = F::from_ratio(&num, &den).ok_or(Error::Syntax {
                    line: 1,
                    column: at + 1,
                    message: "denominator vanishes in the coefficient field".into(),
                })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].1.is_ascii_alphanumeric() || self.chars[self.pos].1 == '_')
                {
                    self.pos += 1;
                }
                let name = self.slice(start, self.pos);
                let i = self
                    .ring
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                Ok(Polynomial::var(self.ring, i).pow(self.exponent()?))
            }
            _ => Err(self.error("expected a coefficient, variable or `(`, found")),
        }
    }
}
