//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := INT | VAR | VAR '^' INT | '(' expr ')' | '-' factor
//! ```
//!
//! Multiplication must be explicit. Over QQ a literal `INT '/' INT` is read as a
//! rational constant; any other use of `/` is rejected.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(src[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    vars: &'a [String],
    field: FieldSpec,
    order: MonomialOrder,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field, self.vars.len(), self.order)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.factor()?)?;
                }
                Tok::Slash => return Err(Error::DivisionRejected { pos: self.pos() }),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Int(n) => {
                if *self.peek() == Tok::Slash {
                    let slash = self.pos();
                    if self.field != FieldSpec::Rationals {
                        return Err(Error::DivisionRejected { pos: slash });
                    }
                    self.bump();
                    let (den, dpos) = self.bump();
                    let Tok::Int(den) = den else {
                        return Err(Error::DivisionRejected { pos: slash });
                    };
                    let c = self.field.from_fraction(&n, &den).ok_or(Error::Syntax {
                        pos: dpos,
                        msg: "zero denominator".into(),
                    })?;
                    return Ok(Polynomial::constant(self.field, self.vars.len(), self.order, c));
                }
                let c = self.field.from_bigint(&n);
                Ok(Polynomial::constant(self.field, self.vars.len(), self.order, c))
            }
            Tok::Ident(name) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or(Error::UnknownVariable { name, pos })?;
                let mut exp = 1u32;
                if *self.peek() == Tok::Caret {
                    self.bump();
                    let (t, epos) = self.bump();
                    match t {
                        Tok::Int(e) => {
                            exp = u32::try_from(&e).map_err(|_| Error::Syntax {
                                pos: epos,
                                msg: "exponent too large".into(),
                            })?;
                        }
                        _ => {
                            return Err(Error::Syntax {
                                pos: epos,
                                msg: "expected integer exponent".into(),
                            })
                        }
                    }
                }
                let mut e = vec![0; self.vars.len()];
                e[idx] = exp;
                Ok(Polynomial::term(
                    self.field,
                    self.order,
                    Monomial::new(e),
                    self.field.one(),
                ))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let (t, p) = self.bump();
                if t != Tok::RParen {
                    return Err(Error::Syntax {
                        pos: p,
                        msg: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            Tok::Minus => Ok(self.zero().sub(&self.factor()?)?),
            Tok::Slash => Err(Error::DivisionRejected { pos }),
            Tok::End => Err(Error::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
            other => Err(Error::Syntax {
                pos,
                msg: format!("unexpected token {other:?}"),
            }),
        }
    }
}

pub fn validate_vars(vars: &[String]) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        let ok = v
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok || vars[..i].contains(v) {
            return Err(Error::BadVariable(v.clone()));
        }
    }
    Ok(())
}

pub fn parse_polynomial(
    src: &str,
    vars: &[String],
    field: FieldSpec,
    order: MonomialOrder,
) -> Result<Polynomial> {
    validate_vars(vars)?;
    let toks = tokenize(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        vars,
        field,
        order,
    };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        Tok::Slash => Err(Error::DivisionRejected { pos: p.pos() }),
        other => Err(Error::Syntax {
            pos: p.pos(),
            msg: format!("unexpected token {other:?} (implicit multiplication is not allowed)"),
        }),
    }
}
