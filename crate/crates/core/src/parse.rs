//! Polynomial text format: parsing against a declared variable set and
//! canonical printing.
//!
//! Grammar: a signed sum of terms; a term is '*'-separated factors, each
//! a rational constant (`a` or `a/b`) or a variable with an optional
//! `^exp`. Factors may appear in any order; words like `d*x` are
//! normalized through the algebra product. Canonical printing lists terms
//! in descending monomial order, reduced fractions, `1*` elided.

use alloc::string::String;

use crate::algebra::SolvableAlgebra;
use crate::coeff::Coefficient;
use crate::error::{Error, Result};
use crate::monomial::MultiIndex;
use crate::poly::Polynomial;

/// Parse a polynomial in the algebra's variables, normalizing factor
/// words through the algebra product.
pub fn parse_poly(alg: &SolvableAlgebra, input: &str) -> Result<Polynomial> {
    Parser { alg, bytes: input.as_bytes(), pos: 0 }.parse()
}

struct Parser<'a> {
    alg: &'a SolvableAlgebra,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty polynomial"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                None if !first => break,
                None => return Err(self.error("expected a term")),
                Some(_) if first => false,
                Some(c) => {
                    return Err(self.error(&alloc::format!(
                        "expected '+' or '-', found '{}'",
                        c as char
                    )))
                }
            };
            let term = self.parse_term()?;
            acc = if sign { acc.sub(&term) } else { acc.add(&term) };
            first = false;
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        let mut acc = self.alg.one();
        loop {
            self.skip_ws();
            let factor = self.parse_factor()?;
            acc = self.alg.mul(&acc, &factor);
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = self.parse_rational()?;
                Ok(Polynomial::constant(self.alg.nvars(), coeff))
            }
            Some(_) => {
                let idx = self.parse_variable()?;
                let exp = self.parse_exponent()?;
                let mut m = MultiIndex::zero(self.alg.nvars());
                m.0[idx] = exp;
                Ok(self.alg.mono(m))
            }
            None => Err(self.error("expected a factor")),
        }
    }

    fn parse_rational(&mut self) -> Result<Coefficient> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let mut end = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let dstart = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                self.pos += 1;
            }
            if self.pos == dstart {
                return Err(self.error("expected a denominator"));
            }
            end = self.pos;
        }
        let text = core::str::from_utf8(&self.bytes[start..end]).unwrap();
        self.alg
            .field()
            .parse(text)
            .ok_or_else(|| self.error(&alloc::format!("bad rational '{text}'")))
    }

    /// Longest declared variable name starting here.
    fn parse_variable(&mut self) -> Result<usize> {
        let rest = &self.bytes[self.pos..];
        let mut best: Option<(usize, usize)> = None; // (len, index)
        for (i, name) in self.alg.names().iter().enumerate() {
            let nb = name.as_bytes();
            if rest.starts_with(nb) && best.is_none_or(|(l, _)| nb.len() > l) {
                best = Some((nb.len(), i));
            }
        }
        match best {
            Some((len, i)) => {
                self.pos += len;
                Ok(i)
            }
            None => Err(self.error("expected a variable name")),
        }
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an exponent"));
        }
        core::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.error("exponent out of range"))
    }
}

/// Canonical text form: terms in descending monomial order, `1*` elided,
/// exponent 1 elided, reduced fractions.
pub fn poly_to_string(alg: &SolvableAlgebra, f: &Polynomial) -> String {
    use core::fmt::Write;
    if f.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (k, (m, c)) in f.terms_desc(alg.ordering()).into_iter().enumerate() {
        let neg = c.is_negative_display();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs_display();
        if m.is_zero() {
            out.push_str(&abs);
            continue;
        }
        let mut lead = true;
        if abs != "1" {
            out.push_str(&abs);
            lead = false;
        }
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !lead {
                out.push('*');
            }
            lead = false;
            out.push_str(&alg.names()[i]);
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
    }
    out
}
