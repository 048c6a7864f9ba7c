//! Recursive-descent parser for expressions over `q` (or another named
//! coefficient variable) and `X`.
//!
//! Grammar:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' ['-'] int)?
//! primary := int | var | 'X' | '(' expr ')'
//! ```
//!
//! Division is only allowed by a single nonzero term `c X^e`.

use num_bigint::BigInt;

use super::{QRat, XLaurent};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var,
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str, var: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => { out.push(Tok::Plus); i += 1; }
            '-' => { out.push(Tok::Minus); i += 1; }
            '*' => { out.push(Tok::Star); i += 1; }
            '/' => { out.push(Tok::Slash); i += 1; }
            '^' => { out.push(Tok::Caret); i += 1; }
            '(' => { out.push(Tok::LParen); i += 1; }
            ')' => { out.push(Tok::RParen); i += 1; }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Int(digits.parse().unwrap()));
            }
            a if a.is_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let ident: String = chars[start..i].iter().collect();
                if ident == "X" {
                    out.push(Tok::X);
                } else if ident == var {
                    out.push(Tok::Var);
                } else {
                    return Err(Error::Parse(format!("unknown identifier `{ident}`")));
                }
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<XLaurent> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<XLaurent> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = &acc * &invert(&d)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<XLaurent> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<XLaurent> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let k = match self.next() {
            Some(Tok::Int(k)) => u32::try_from(k)
                .map_err(|_| Error::Parse("exponent out of range".into()))?,
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        if neg {
            Ok(invert(&base)?.pow(k))
        } else {
            Ok(base.pow(k))
        }
    }

    fn primary(&mut self) -> Result<XLaurent> {
        match self.next() {
            Some(Tok::Int(c)) => Ok(XLaurent::constant(QRat::from_int(c))),
            Some(Tok::Var) => Ok(XLaurent::constant(QRat::q_power(1))),
            Some(Tok::X) => Ok(XLaurent::x()),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    other => Err(Error::Parse(format!("expected `)`, found {other:?}"))),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn invert(d: &XLaurent) -> Result<XLaurent> {
    match d.as_monomial() {
        Some((e, c)) => Ok(XLaurent::monomial(c.inv()?, -e)),
        None if d.is_zero() => Err(Error::DivisionByZero),
        None => Err(Error::Parse(format!(
            "can only divide by a single term, not `{d}`"
        ))),
    }
}

pub(crate) fn parse_laurent(s: &str, var: &str) -> Result<XLaurent> {
    let toks = lex(s, var)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {:?}",
            p.toks[p.pos]
        )));
    }
    Ok(v)
}
