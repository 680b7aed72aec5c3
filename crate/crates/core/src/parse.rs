//! Polynomial text grammar: integer literals, variable names matching
//! [a-zA-Z][a-zA-Z0-9_]*, the operators + - * ^ /, and parentheses.
//! Implicit multiplication is a parse error. Division is only allowed by a
//! nonzero constant, so canonical rational output re-parses.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::CoefRing;
use num_bigint::BigInt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push((i, Token::Minus));
                i += c.len_utf8();
            }
            '*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Token::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Token::Slash));
                i += 1;
            }
            '(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = input[start..i].parse().unwrap();
                out.push((start, Token::Int(v)));
            }
            'a'..='z' | 'A'..='Z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Token::Ident(input[start..i].to_string())));
            }
            _ => {
                // handle the unicode minus above; anything else is an error
                return Err(Error::Parse {
                    pos: i,
                    msg: format!("unexpected character {c:?}"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    ring: &'a CoefRing,
    vars: &'a Arc<Vec<String>>,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.input_len)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        // leading sign
        loop {
            match self.peek() {
                Some(Token::Minus) => {
                    negate = !negate;
                    self.pos += 1;
                }
                Some(Token::Plus) => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f)?;
                }
                Some(Token::Slash) => {
                    let at = self.here();
                    self.pos += 1;
                    let f = self.factor()?;
                    if !f.is_constant() || f.is_zero() {
                        return Err(Error::Parse {
                            pos: at,
                            msg: "division only by a nonzero constant".into(),
                        });
                    }
                    let (_, c) = f.leading().unwrap();
                    let inv = self.ring.inv(c).map_err(|_| Error::Parse {
                        pos: at,
                        msg: "divisor is not invertible in this ring".into(),
                    })?;
                    acc = acc.scale(&inv);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.peek() == Some(&Token::Caret) {
            let at = self.here();
            self.pos += 1;
            match self.next() {
                Some(Token::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| Error::Parse {
                        pos: at,
                        msg: "exponent must be a small nonnegative integer".into(),
                    })?;
                    return base.pow(e);
                }
                _ => {
                    return Err(Error::Parse {
                        pos: at,
                        msg: "expected integer exponent after ^".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        let at = self.here();
        match self.next() {
            Some(Token::Int(v)) => Ok(Polynomial::constant(
                self.ring,
                self.vars,
                self.ring.from_bigint(&v),
            )),
            Some(Token::Ident(name)) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::Parse {
                        pos: at,
                        msg: format!("unknown variable {name}"),
                    })?;
                Ok(Polynomial::var(self.ring, self.vars, idx))
            }
            Some(Token::Minus) => Ok(self.factor()?.neg()),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse {
                        pos: at,
                        msg: "unclosed parenthesis".into(),
                    }),
                }
            }
            other => Err(Error::Parse {
                pos: at,
                msg: format!("expected a factor, found {other:?}"),
            }),
        }
    }
}

pub fn parse_polynomial(
    input: &str,
    ring: &CoefRing,
    vars: &Arc<Vec<String>>,
) -> Result<Polynomial> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
        vars,
        input_len: input.len(),
    };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse {
            pos: p.here(),
            msg: "trailing input (implicit multiplication is not allowed)".into(),
        });
    }
    Ok(out)
}
