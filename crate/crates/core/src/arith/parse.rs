//! Infix polynomial parser: `+ - * ^`, parentheses, integer and `a/b` literals.

use std::iter::Peekable;
use std::str::CharIndices;
use std::sync::Arc;

use num_bigint::BigInt;

use super::poly::Poly;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt, Option<BigInt>),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str, line: usize) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut it: Peekable<CharIndices> = text.char_indices().peekable();
    let digits = |it: &mut Peekable<CharIndices>| {
        let mut s = String::new();
        while let Some(&(_, c)) = it.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            s.push(c);
            it.next();
        }
        s
    };
    while let Some(&(_, c)) = it.peek() {
        match c {
            ' ' | '\t' | '\r' => {
                it.next();
            }
            '0'..='9' => {
                let num: BigInt = digits(&mut it).parse().unwrap();
                let mut den = None;
                if let Some(&(_, '/')) = it.peek() {
                    it.next();
                    let d = digits(&mut it);
                    if d.is_empty() {
                        return Err(Error::parse(line, "expected a denominator after `/`"));
                    }
                    den = Some(d.parse().unwrap());
                }
                if let Some(&(_, '.')) = it.peek() {
                    return Err(Error::parse(line, "decimal numbers are not supported"));
                }
                out.push(Tok::Num(num, den));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&(_, c)) = it.peek() {
                    if !(c.is_ascii_alphanumeric() || c == '_') {
                        break;
                    }
                    s.push(c);
                    it.next();
                }
                out.push(Tok::Ident(s));
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                it.next();
                out.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    _ => Tok::RParen,
                });
            }
            '/' => {
                return Err(Error::parse(
                    line,
                    "division is only allowed inside rational literals such as 1/2",
                ))
            }
            c => return Err(Error::parse(line, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    toks: Vec<Tok>,
    pos: usize,
    line: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, msg)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Num(..)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(self.err("missing `*` between factors"))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Some(Tok::Num(n, None)) => {
                let e: u32 = n.try_into().map_err(|_| self.err("exponent is too large"))?;
                Ok(base.pow(e))
            }
            Some(Tok::Minus) => Err(self.err("negative exponents are not allowed")),
            _ => Err(self.err("exponent must be a nonnegative integer literal")),
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.bump() {
            Some(Tok::Num(n, d)) => {
                let f = self.ring.field();
                let c = match d {
                    None => f.from_bigint(&n),
                    Some(d) => f.from_ratio(&n, &d).map_err(|e| self.err(e.to_string()))?,
                };
                Ok(Poly::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => match self.ring.var(&name) {
                Some(v) => Ok(Poly::var(self.ring, v)),
                None => Err(self.err(format!("unknown identifier `{name}`"))),
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses one polynomial; errors report the given line number.
pub fn parse_poly_at(ring: &Arc<Ring>, text: &str, line: usize) -> Result<Poly> {
    let toks = lex(text, line)?;
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        line,
    };
    let e = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(p.err(format!("unexpected trailing token {t:?}")));
    }
    Ok(e)
}

pub fn parse_poly(ring: &Arc<Ring>, text: &str) -> Result<Poly> {
    parse_poly_at(ring, text, 1)
}
