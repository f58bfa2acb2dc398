//! Integer expressions in one variable `n`, used for growth rules such as
//! `f(n) = n^2` or `a_n = isqrt(n)`.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := power (('*' | '/') power)*
//! power  := atom ('^' power)?
//! atom   := integer | 'n' | ('isqrt' | 'sqrt') '(' expr ')' | '(' expr ')'
//! ```
//!
//! `/` is floor division and `sqrt` is the floor square root. Values are
//! nonnegative integers; a negative intermediate result is an error.

use std::fmt;

use num_integer::Roots;

use crate::error::{Error, Result};

const MAX_DEPTH: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Const(u64),
    Var,
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, Box<Node>),
    Sqrt(Box<Node>),
}

/// A parsed growth expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthExpr {
    source: String,
    root: Node,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn enter(&mut self) -> Result<()> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Node> {
        self.enter()?;
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                break;
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.power()?;
        loop {
            if self.eat(b'*') {
                lhs = Node::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat(b'/') {
                lhs = Node::Div(Box::new(lhs), Box::new(self.power()?));
            } else {
                break;
            }
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.enter()?;
            let exp = self.power()?;
            self.depth -= 1;
            return Ok(Node::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                text.parse::<u64>().map(Node::Const).map_err(|_| Error::Syntax { pos: start, msg: "integer too large".into() })
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                match &self.src[start..self.pos] {
                    b"n" => Ok(Node::Var),
                    b"sqrt" | b"isqrt" => {
                        if !self.eat(b'(') {
                            return Err(self.err("expected `(` after sqrt"));
                        }
                        let e = self.expr()?;
                        if !self.eat(b')') {
                            return Err(self.err("expected `)`"));
                        }
                        Ok(Node::Sqrt(Box::new(e)))
                    }
                    _ => Err(Error::Syntax { pos: start, msg: "unknown identifier".into() }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn overflow(what: &str) -> Error {
    Error::Eval(format!("{what} overflows"))
}

impl Node {
    fn eval(&self, n: u64) -> Result<u64> {
        Ok(match self {
            Node::Const(c) => *c,
            Node::Var => n,
            Node::Add(a, b) => a.eval(n)?.checked_add(b.eval(n)?).ok_or_else(|| overflow("sum"))?,
            Node::Sub(a, b) => {
                let (x, y) = (a.eval(n)?, b.eval(n)?);
                x.checked_sub(y).ok_or_else(|| Error::Eval(format!("negative value {x} - {y}")))?
            }
            Node::Mul(a, b) => a.eval(n)?.checked_mul(b.eval(n)?).ok_or_else(|| overflow("product"))?,
            Node::Div(a, b) => {
                let d = b.eval(n)?;
                if d == 0 {
                    return Err(Error::Eval("division by zero".into()));
                }
                a.eval(n)? / d
            }
            Node::Pow(a, b) => {
                let e = u32::try_from(b.eval(n)?).map_err(|_| overflow("power"))?;
                a.eval(n)?.checked_pow(e).ok_or_else(|| overflow("power"))?
            }
            Node::Sqrt(a) => a.eval(n)?.sqrt(),
        })
    }
}

impl GrowthExpr {
    pub fn parse(text: &str) -> Result<GrowthExpr> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, depth: 0 };
        let root = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(GrowthExpr { source: text.trim().to_string(), root })
    }

    pub fn eval(&self, n: u64) -> Result<u64> {
        self.root.eval(n)
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}

impl fmt::Display for GrowthExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(s: &str, n: u64) -> u64 {
        GrowthExpr::parse(s).unwrap().eval(n).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(ev("n^2", 6), 36);
        assert_eq!(ev("isqrt(n)", 4), 2);
        assert_eq!(ev("sqrt(n)", 8), 2);
        assert_eq!(ev("2*n + 3", 5), 13);
        assert_eq!(ev("(n+1)/2", 4), 2);
        assert_eq!(ev("2^n^2", 2), 16);
        assert_eq!(ev("n - 1", 1), 0);
    }

    #[test]
    fn errors() {
        assert!(GrowthExpr::parse("n +").is_err());
        assert!(GrowthExpr::parse("m").is_err());
        assert!(GrowthExpr::parse("n)").is_err());
        assert!(GrowthExpr::parse(&"(".repeat(100)).is_err());
        assert!(matches!(GrowthExpr::parse("n - 2").unwrap().eval(1), Err(Error::Eval(_))));
        assert!(matches!(GrowthExpr::parse("n / 0").unwrap().eval(1), Err(Error::Eval(_))));
        assert!(matches!(GrowthExpr::parse("n ^ 100").unwrap().eval(3), Err(Error::Eval(_))));
    }

    proptest! {
        #[test]
        fn polynomial_rules_match_direct_evaluation(a in 0u64..50, b in 0u64..50, n in 0u64..1000) {
            let e = GrowthExpr::parse(&format!("{a}*n^2 + {b}*n + isqrt(n)")).unwrap();
            prop_assert_eq!(e.eval(n).unwrap(), a * n * n + b * n + (n as f64).sqrt().floor() as u64);
        }
    }
}
