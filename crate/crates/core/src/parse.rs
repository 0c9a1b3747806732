//! Polynomial text grammar.
//!
//! Terms joined by `+`/`-`; a term is `[coeff][*][var[^exp]]...` with the
//! coefficient an integer or `integer/integer`. Whitespace is insignificant.
//! Variables must be declared by the ring context, never inferred.

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn take_while(&mut self, pred: impl Fn(u8) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && pred(self.src[self.pos]) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_'
}

fn is_ident(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut out = Polynomial::zero(ring);
    let mut sign = 1i64;
    let mut expect_term = true;
    loop {
        match lx.peek() {
            None => {
                if expect_term {
                    return Err(Error::Syntax {
                        pos: lx.pos,
                        msg: "expected a term".into(),
                    });
                }
                return Ok(out);
            }
            Some(b'+') if !expect_term => {
                lx.bump();
                sign = 1;
                expect_term = true;
            }
            Some(b'-') if !expect_term => {
                lx.bump();
                sign = -1;
                expect_term = true;
            }
            Some(b'-') if expect_term => {
                lx.bump();
                sign = -sign;
            }
            Some(_) if expect_term => {
                let term = parse_term(&mut lx, ring)?;
                let term = if sign < 0 { term.neg() } else { term };
                out = out.add(&term);
                sign = 1;
                expect_term = false;
            }
            Some(c) => {
                return Err(Error::Syntax {
                    pos: lx.pos,
                    msg: format!("unexpected `{}`", c as char),
                });
            }
        }
    }
}

fn parse_term(lx: &mut Lexer, ring: &Ring) -> Result<Polynomial> {
    let mut coeff: Option<Coeff> = None;
    let mut exps = Monomial::one(ring.nvars());
    let mut saw_factor = false;
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                if coeff.is_some() || saw_factor {
                    return Err(Error::Syntax {
                        pos: lx.pos,
                        msg: "coefficient must come first".into(),
                    });
                }
                let num = lx.take_while(|c| c.is_ascii_digit());
                let text = if lx.peek() == Some(b'/') {
                    lx.bump();
                    let den = lx.take_while(|c| c.is_ascii_digit());
                    if den.is_empty() {
                        return Err(Error::Syntax {
                            pos: lx.pos,
                            msg: "expected denominator".into(),
                        });
                    }
                    format!("{num}/{den}")
                } else {
                    num.to_string()
                };
                coeff = Some(ring.field.parse(&text)?);
                saw_factor = true;
            }
            Some(c) if is_ident_start(c) => {
                let start = lx.pos;
                let name = lx.take_while(is_ident);
                let idx = ring
                    .var_index(name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                let _ = start;
                let mut exp = 1u32;
                if lx.peek() == Some(b'^') {
                    lx.bump();
                    let digits = lx.take_while(|c| c.is_ascii_digit());
                    exp = digits.parse().map_err(|_| Error::Syntax {
                        pos: lx.pos,
                        msg: "expected exponent".into(),
                    })?;
                }
                exps.0[idx] += exp;
                saw_factor = true;
            }
            Some(b'*') if saw_factor => {
                lx.bump();
                // a factor must follow
                match lx.peek() {
                    Some(c) if c.is_ascii_digit() || is_ident_start(c) => {}
                    _ => {
                        return Err(Error::Syntax {
                            pos: lx.pos,
                            msg: "expected a factor after `*`".into(),
                        });
                    }
                }
            }
            _ => break,
        }
    }
    if !saw_factor {
        return Err(Error::Syntax {
            pos: lx.pos,
            msg: "expected a term".into(),
        });
    }
    let c = coeff.unwrap_or_else(|| ring.field.one());
    Ok(Polynomial::term(ring, exps, c))
}
