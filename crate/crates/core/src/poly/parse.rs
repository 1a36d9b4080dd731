//! Text grammar: terms joined by `+`/`-`, a term is factors joined by `*`,
//! a factor is an integer or `var[^exp]`.

use std::sync::Arc;

use crate::error::{Error, Result};

use super::{Monomial, Polynomial, RingContext};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn column(&self) -> usize {
        self.src[..self.pos].chars().count() + 1
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }
}

pub(crate) fn parse_polynomial(ring: &Arc<RingContext>, text: &str) -> Result<Polynomial> {
    let field = *ring.field();
    let mut cur = Cursor { src: text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(err(cur.column(), "empty polynomial"));
            }
            break;
        }
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else if first {
            false
        } else {
            return Err(err(
                cur.column(),
                format!("expected `+` or `-`, found `{}`", cur.peek().unwrap()),
            ));
        };
        first = false;

        let mut coeff = 1u32;
        let mut mono = Monomial::one(ring.nvars());
        loop {
            cur.skip_ws();
            let col = cur.column();
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let digits = cur.take_while(|c| c.is_ascii_digit());
                    let value = digits.bytes().fold(0u32, |acc, d| {
                        field.reduce_u64(acc as u64 * 10 + (d - b'0') as u64)
                    });
                    coeff = field.mul(coeff, value);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                    let name = cur.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                    let index = ring
                        .var_index(name)
                        .ok_or_else(|| err(col, format!("unknown variable {name}")))?;
                    let mut exp = 1u32;
                    if cur.eat('^') {
                        cur.skip_ws();
                        let ecol = cur.column();
                        let digits = cur.take_while(|c| c.is_ascii_digit());
                        if digits.is_empty() {
                            return Err(err(ecol, "expected exponent after `^`"));
                        }
                        exp = digits.parse::<u32>().map_err(|_| Error::ExponentOverflow)?;
                    }
                    let slot = &mut mono.exponents_mut()[index];
                    *slot = slot.checked_add(exp).ok_or(Error::ExponentOverflow)?;
                }
                Some(c) => return Err(err(col, format!("unexpected character `{c}`"))),
                None => return Err(err(col, "unexpected end of input")),
            }
            if !cur.eat('*') {
                break;
            }
        }
        if negative {
            coeff = field.neg(coeff);
        }
        terms.push((mono, coeff));
    }
    Ok(Polynomial::from_terms(ring, terms))
}
