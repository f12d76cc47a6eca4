//! Recursive-descent parser for Laurent polynomial expressions.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/')? factor)*      juxtaposition means '*'
//! factor := atom ('^' exponent)?
//! atom   := integer | variable | '(' expr ')'
//! exponent := ['-'] integer | '(' ['-'] integer ')'
//! ```
//!
//! Division is only allowed by a nonzero constant. Negative exponents need a
//! unit base (a monomial with invertible coefficient).

use num_bigint::BigInt;

use super::{Coeff, LaurentPoly, Ring};
use crate::error::{Error, ParseError};

pub fn parse<C: Coeff>(text: &str, ring: Ring) -> Result<LaurentPoly<C>, Error> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    p.skip_ws();
    if p.at_end() {
        return Err(p.syntax("empty expression"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax(&format!("unexpected `{}`", p.peek().unwrap() as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: Ring,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, msg: &str) -> Error {
        ParseError::Syntax { pos: self.pos, msg: msg.to_string() }.into()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr<C: Coeff>(&mut self) -> Result<LaurentPoly<C>, Error> {
        let mut acc = LaurentPoly::zero(self.ring);
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let term = self.term()?;
            acc = if negate { acc.try_sub(&term)? } else { acc.try_add(&term)? };
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<C: Coeff>(&mut self) -> Result<LaurentPoly<C>, Error> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let d: LaurentPoly<C> = self.factor()?;
                    let c = match d.as_monomial() {
                        Some((e, c)) if e.is_zero() => c.clone(),
                        _ if d.is_zero() => {
                            return Err(ParseError::Syntax { pos: at, msg: "division by zero".into() }.into())
                        }
                        _ => {
                            return Err(ParseError::Syntax { pos: at, msg: "can only divide by a constant".into() }.into())
                        }
                    };
                    acc = acc.div_scalar(&c).map_err(|e| ParseError::Syntax { pos: at, msg: e.to_string() })?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.try_mul(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor<C: Coeff>(&mut self) -> Result<LaurentPoly<C>, Error> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let at = self.pos;
            let e = self.exponent()?;
            return base.pow(e).map_err(|_| {
                ParseError::Syntax { pos: at, msg: "negative power of a non-unit".into() }.into()
            });
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, Error> {
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.syntax("expected integer exponent"));
        }
        let v: i64 = digits.parse().map_err(|_| self.syntax("exponent out of range"))?;
        if paren && !self.eat(b')') {
            return Err(self.syntax("expected `)`"));
        }
        Ok(if neg { -v } else { v })
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom<C: Coeff>(&mut self) -> Result<LaurentPoly<C>, Error> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            None => Err(self.syntax("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits();
                let v: BigInt = d.parse().expect("ascii digits");
                Ok(LaurentPoly::constant(self.ring, C::from_bigint(v)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                let idx = self.ring.lookup(&name).ok_or_else(|| ParseError::UnknownVariable {
                    name: name.clone(),
                    pos: start,
                    ring: self.ring,
                })?;
                Ok(LaurentPoly::var(self.ring, idx)?)
            }
            Some(c) => Err(self.syntax(&format!("unexpected `{}`", c as char))),
        }
    }
}
