//! Parser for the ideal text grammar.
//!
//! Grammar (UTF-8): comma-separated monomials; a monomial is `x<k>` or
//! `x<k>^<d>` factors joined by `*`. Variables are 1-based `x1..xn`; the
//! ambient count is inferred as the largest index unless given explicitly.
//! `1` denotes the unit ideal and `0` the zero ideal (both need an explicit
//! ambient count, since no variable appears).

use crate::error::{Error, ParseError, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        Cursor { text, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    /// 1-based (line, column) of the current position.
    fn location(&self) -> (usize, usize) {
        let before = &self.text[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
        (line, column)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, column) = self.location();
        ParseError::new(line, column, message)
    }

    fn number(&mut self) -> std::result::Result<u64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        self.text[start..self.pos]
            .parse::<u64>()
            .map_err(|_| self.error("number too large"))
    }
}

/// One parsed monomial: (variable, degree) pairs, 1-based.
fn parse_monomial(cur: &mut Cursor<'_>) -> std::result::Result<Vec<(usize, u32)>, ParseError> {
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some('x') => {
                cur.bump();
                let var_pos = cur.location();
                let k = cur.number()?;
                if k == 0 {
                    return Err(ParseError::new(
                        var_pos.0,
                        var_pos.1,
                        "variables are 1-based: x0 is not a variable",
                    ));
                }
                let mut d: u64 = 1;
                if cur.peek() == Some('^') {
                    cur.bump();
                    let deg_pos = cur.location();
                    d = cur.number()?;
                    if d == 0 {
                        return Err(ParseError::new(
                            deg_pos.0,
                            deg_pos.1,
                            "exponent must be a positive integer",
                        ));
                    }
                }
                if d > u32::MAX as u64 {
                    return Err(cur.error("exponent too large"));
                }
                factors.push((k as usize, d as u32));
            }
            Some('1') if factors.is_empty() => {
                cur.bump();
                // The monomial 1: no factors.
            }
            _ => {
                return Err(cur.error("expected a factor `x<k>` or `x<k>^<d>`"));
            }
        }
        cur.skip_ws();
        if cur.peek() == Some('*') {
            cur.bump();
        } else {
            return Ok(factors);
        }
    }
}

/// Parses the text grammar into a [`MonomialIdeal`]. When `ambient` is
/// `None` the variable count is inferred as the largest index used.
pub fn parse_ideal_text(text: &str, ambient: Option<usize>) -> Result<MonomialIdeal> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if cur.peek().is_none() {
        return Err(cur.error("empty input (use `0` for the zero ideal)").into());
    }

    // `0` alone denotes the zero ideal.
    if cur.peek() == Some('0') {
        cur.bump();
        cur.skip_ws();
        if cur.peek().is_some() {
            return Err(cur.error("unexpected input after `0`").into());
        }
        let n = ambient.ok_or_else(|| {
            ParseError::new(1, 1, "the zero ideal needs an explicit ambient variable count")
        })?;
        return MonomialIdeal::new(n, vec![]);
    }

    let mut monomials: Vec<Vec<(usize, u32)>> = Vec::new();
    loop {
        monomials.push(parse_monomial(&mut cur)?);
        cur.skip_ws();
        match cur.peek() {
            Some(',') => {
                cur.bump();
            }
            None => break,
            Some(c) => return Err(cur.error(format!("unexpected character `{c}`")).into()),
        }
    }

    let max_index = monomials
        .iter()
        .flat_map(|m| m.iter().map(|&(k, _)| k))
        .max()
        .unwrap_or(0);
    let n = match ambient {
        Some(n) => {
            if max_index > n {
                return Err(Error::VariableOutOfRange(max_index, n));
            }
            n
        }
        None => {
            if max_index == 0 {
                return Err(ParseError::new(
                    1,
                    1,
                    "the unit ideal needs an explicit ambient variable count",
                )
                .into());
            }
            max_index
        }
    };

    let gens = monomials
        .into_iter()
        .map(|factors| {
            let mut coords = vec![0u32; n];
            for (k, d) in factors {
                coords[k - 1] = coords[k - 1].saturating_add(d);
            }
            Exponent::new(coords)
        })
        .collect();
    MonomialIdeal::new(n, gens)
}
