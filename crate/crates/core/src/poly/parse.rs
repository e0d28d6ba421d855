use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

use super::monomial::Monomial;
use super::multipoly::MultiPoly;
use super::ring::PolyRing;

/// Plain-text polynomial grammar:
///
/// ```text
/// poly   := ['-'] term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := rational | var ['^' uint]
/// rational := uint ['/' uint]
/// ```
///
/// Variables must be declared in the ambient ring. Whitespace is free.
pub fn parse_poly(ring: &Arc<PolyRing>, input: &str) -> Result<MultiPoly> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        ring,
        tokens,
        pos: 0,
    };
    let poly = p.poly()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {} in `{input}`",
            p.pos
        )));
    }
    Ok(poly)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    Int(String),
    Ident(String),
}

fn tokenize(input: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                out.push(Tok::Star);
            }
            '^' => {
                chars.next();
                out.push(Tok::Caret);
            }
            '/' => {
                chars.next();
                out.push(Tok::Slash);
            }
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Int(s));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(s));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    tokens: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.ring);
        let mut negate = false;
        if let Some(Tok::Minus) = self.peek() {
            self.next();
            negate = true;
        }
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.next();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Tok::Int(num)) => {
                let num: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse("bad integer".into()))?;
                let den = if let Some(Tok::Slash) = self.peek() {
                    self.next();
                    match self.next() {
                        Some(Tok::Int(d)) => d
                            .parse()
                            .map_err(|_| Error::Parse("bad denominator".into()))?,
                        _ => return Err(Error::Parse("expected denominator after `/`".into())),
                    }
                } else {
                    BigInt::one()
                };
                if den == BigInt::from(0) {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok(MultiPoly::constant(self.ring, BigRational::new(num, den)))
            }
            Some(Tok::Ident(name)) => {
                let idx = self.ring.var_index(&name).ok_or_else(|| {
                    Error::Parse(format!("unknown variable `{name}` for this ring"))
                })?;
                let exp: u32 = if let Some(Tok::Caret) = self.peek() {
                    self.next();
                    match self.next() {
                        Some(Tok::Int(e)) => {
                            e.parse().map_err(|_| Error::Parse("bad exponent".into()))?
                        }
                        _ => return Err(Error::Parse("expected exponent after `^`".into())),
                    }
                } else {
                    1
                };
                let mut exps = vec![0u32; self.ring.nvars()];
                exps[idx] = exp;
                Ok(MultiPoly::monomial(
                    self.ring,
                    Monomial::new(exps),
                    BigRational::one(),
                ))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}
