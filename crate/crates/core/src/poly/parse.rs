//! Text syntax for polynomials: `x^2*y + 3*z`, `-(x - y)^2`, `y*(y^2 + x*z)`.
//! Rational constants may be written `3/4`; division is only allowed by
//! nonzero constants.

use super::{PolyOf, PolyRing};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    /// 1-based character column of the offending token.
    pub column: usize,
    pub message: String,
}

struct Parser<'a, K: Field> {
    ring: &'a PolyRing<K>,
    chars: Vec<char>,
    pos: usize,
}

impl<'a, K: Field> Parser<'a, K> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<PolyOf<K>, ParseError> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                let t = self.term()?;
                self.ring.neg(&t)
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<PolyOf<K>, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = self.ring.mul(&acc, &f);
                }
                Some('/') => {
                    self.pos += 1;
                    let start = self.pos;
                    let f = self.power()?;
                    let k = self.ring.field();
                    let is_const = f.terms().len() == 1 && f.terms()[0].0.is_one();
                    if !is_const {
                        self.pos = start;
                        return self.err("division is only allowed by nonzero constants");
                    }
                    let inv = k.inv(&f.terms()[0].1).expect("nonzero constant");
                    acc = self.ring.scale(&acc, &inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<PolyOf<K>, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return self.err("expected a nonnegative integer exponent");
            }
            let s: String = self.chars[start..self.pos].iter().collect();
            let Ok(e) = s.parse::<u32>() else {
                self.pos = start;
                return self.err("exponent too large");
            };
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PolyOf<K>, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                let a = self.power()?;
                Ok(self.ring.neg(&a))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let k = self.ring.field();
                // Reduce digit by digit so arbitrarily long literals work over F_p.
                let ten = k.from_i64(10);
                let mut v = k.zero();
                for d in s.chars() {
                    v = k.add(&k.mul(&v, &ten), &k.from_i64(d.to_digit(10).unwrap() as i64));
                }
                Ok(self.ring.constant(v))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        self.err(format!("unknown variable '{name}'"))
                    }
                }
            }
            Some(c) => self.err(format!("unexpected character '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

impl<K: Field> PolyRing<K> {
    /// Parses a polynomial in this ring's variables.
    pub fn parse(&self, text: &str) -> Result<PolyOf<K>, ParseError> {
        let mut p = Parser { ring: self, chars: text.chars().collect(), pos: 0 };
        if p.peek().is_none() {
            return p.err("empty polynomial");
        }
        let e = p.expr()?;
        if let Some(c) = p.peek() {
            return p.err(format!("unexpected character '{c}'"));
        }
        Ok(e)
    }

    /// Parses a comma-separated list of polynomials; columns in errors refer to
    /// the full input.
    pub fn parse_list(&self, text: &str) -> Result<Vec<PolyOf<K>>, ParseError> {
        if text.trim().is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut offset = 0;
        for part in split_top_level(text) {
            let chars = part.chars().count();
            out.push(self.parse(part).map_err(|e| ParseError {
                column: e.column + offset,
                message: e.message,
            })?);
            offset += chars + 1;
        }
        Ok(out)
    }
}

/// Splits on commas that are not inside parentheses.
pub(crate) fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::MonomialOrder;

    #[test]
    fn parses_and_renders_round_trip() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y", "z"], MonomialOrder::GrevLex);
        for s in ["x^2*y + 3*z", "y^2 + x*z", "-x*y*z", "x - 3"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.render(&p), s);
        }
        let p = r.parse("(x + y)^2 - x^2 - y^2").unwrap();
        assert_eq!(r.render(&p), "2*x*y");
        assert_eq!(r.parse("x/2*2").unwrap(), r.var(0));
    }

    #[test]
    fn reports_columns() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x", "y"], MonomialOrder::GrevLex);
        let e = r.parse("x + w").unwrap_err();
        assert_eq!(e.column, 5);
        let e = r.parse("x^").unwrap_err();
        assert_eq!(e.column, 3);
        let e = r.parse_list("x, y +").unwrap_err();
        assert_eq!(e.column, 7);
        assert!(r.parse("x/y").is_err());
    }

    #[test]
    fn rational_constants() {
        let r = PolyRing::new(Rationals, &["x"], MonomialOrder::GrevLex);
        let p = r.parse("x/3 + 1/2").unwrap();
        assert_eq!(r.render(&p), "(1/3)*x + (1/2)");
    }
}
