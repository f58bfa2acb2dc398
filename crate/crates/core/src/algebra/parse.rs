//! Polynomial text syntax.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := int ['/' int] | var ['^' nat] | '(' poly ')' ['^' nat]
//! ```
//! Whitespace is ignored. Variable names are matched longest-first against
//! the ring's declared names, so `xya` reads as `x*y*a` in `F2[x,y,a,b]`.

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

const MAX_DEPTH: usize = 64;
const MAX_GROUP_POWER: u32 = 64;
const MAX_GROUP_DEGREE: u64 = 128;
const MAX_PRODUCT_TERMS: usize = 1 << 22;

struct Parser<'a> {
    ring: &'a Ring,
    chars: Vec<(usize, char)>,
    pos: usize,
    depth: usize,
    names: Vec<(usize, &'a str)>,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, text: &str) -> Parser<'a> {
        let chars = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut names: Vec<(usize, &str)> = ring.vars().iter().enumerate().map(|(i, v)| (i, v.as_str())).collect();
        names.sort_by(|a, b| b.1.len().cmp(&a.1.len()));
        Parser { ring, chars, pos: 0, depth: 0, names }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|c| c.0).unwrap_or_else(|| self.chars.last().map(|c| c.0 + 1).unwrap_or(0))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn syntax<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax { pos: self.offset(), msg: msg.to_string() })
    }

    fn parse_poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = false;
        match self.peek() {
            Some('+') => self.pos += 1,
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let t = self.parse_term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some('+') => {
                    negate = false;
                    self.pos += 1;
                }
                Some('-') => {
                    negate = true;
                    self.pos += 1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(')
    }

    fn parse_term(&mut self) -> Result<Polynomial> {
        if !self.starts_factor() {
            return self.syntax("expected a term");
        }
        let mut acc = self.parse_factor()?;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
                if !self.starts_factor() {
                    return self.syntax("expected a factor after `*`");
                }
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.parse_factor()?;
            acc = mul_checked(&acc, &f)?;
        }
    }

    fn parse_nat(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(digits.parse::<BigInt>().expect("digits"))
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        let n = self.parse_nat()?;
        u32::try_from(n).map_err(|_| Error::ExponentOverflow)
    }

    fn parse_factor(&mut self) -> Result<Polynomial> {
        let c = self.peek().expect("caller checked");
        if c.is_ascii_digit() {
            let num = self.parse_nat()?;
            let den = if self.peek() == Some('/') {
                self.pos += 1;
                self.parse_nat()?
            } else {
                BigInt::from(1)
            };
            let at = self.offset();
            let coeff = self
                .ring
                .field()
                .from_ratio(&num, &den)
                .map_err(|e| Error::Syntax { pos: at, msg: e.to_string() })?;
            return Ok(Polynomial::constant(self.ring, coeff));
        }
        if c == '(' {
            if self.depth >= MAX_DEPTH {
                return self.syntax("parentheses nested too deeply");
            }
            self.pos += 1;
            self.depth += 1;
            let inner = self.parse_poly()?;
            self.depth -= 1;
            if self.peek() != Some(')') {
                return self.syntax("expected `)`");
            }
            self.pos += 1;
            let e = self.parse_exponent()?;
            if inner.is_monomial() {
                let t = &inner.terms()[0];
                let m = t.mono.try_pow(e)?;
                let coeff = self.ring.field().pow(&t.coeff, e as u64);
                return Ok(Polynomial::term(self.ring, m, coeff));
            }
            let deg = inner.degree().unwrap_or(0) as u64;
            if e > MAX_GROUP_POWER || deg * e as u64 > MAX_GROUP_DEGREE {
                return self.syntax("power of a parenthesized sum is too large");
            }
            return Ok(inner.pow(e));
        }
        let at = self.pos;
        for &(i, name) in &self.names {
            let n = name.chars().count();
            if self.chars.len() >= at + n && self.chars[at..at + n].iter().map(|c| c.1).eq(name.chars()) {
                self.pos += n;
                let e = self.parse_exponent()?;
                return Ok(Polynomial::monomial(self.ring, Monomial::var(self.ring.arity(), i, e)));
            }
        }
        let ident: String =
            self.chars[at..].iter().map(|c| c.1).take_while(|c| c.is_ascii_alphanumeric() || *c == '_').collect();
        Err(Error::UnknownVariable { name: ident, pos: self.offset() })
    }
}

fn mul_checked(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.len().saturating_mul(b.len()) > MAX_PRODUCT_TERMS {
        return Err(Error::Syntax { pos: 0, msg: "expression too large".into() });
    }
    for s in a.terms() {
        for t in b.terms() {
            s.mono.try_mul(&t.mono)?;
        }
    }
    Ok(a.mul(b))
}

/// Parses a polynomial in `ring`.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    let mut p = Parser::new(ring, text);
    if p.peek().is_none() {
        return Err(Error::Syntax { pos: 0, msg: "empty input".into() });
    }
    let out = p.parse_poly()?;
    if p.peek().is_some() {
        return p.syntax("unexpected character");
    }
    Ok(out)
}

/// Parses a comma-separated list of polynomials.
pub fn parse_polynomial_list(ring: &Ring, text: &str) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(parse_polynomial(ring, &text[start..i]).map_err(|e| shift(e, start))?);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(parse_polynomial(ring, &text[start..]).map_err(|e| shift(e, start))?);
    Ok(out)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + by, msg },
        Error::UnknownVariable { name, pos } => Error::UnknownVariable { name, pos: pos + by },
        other => other,
    }
}
