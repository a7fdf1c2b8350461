//! Recursive-descent reader for the scalar token grammar.
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := unary (('*'|'/') unary)*
//! unary := '-' unary | power
//! power := atom ['^' ['-'] int]
//! atom  := int | 'r2' | ident | 'tr(' 'A' int ')' | '(' expr ')'
//! ```
//!
//! `r2` is sqrt(2). `tr(Ak)` expands to `ak1 + ak4`, the trace of the
//! 2x2 block written `(ak1 ak2; ak3 ak4)`.

use num_bigint::BigInt;

use super::rational::Rational;
use super::{LaurentExp, MultiPoly, QSqrt2, Ring};
use crate::error::{Error, Result};

pub(crate) trait Parsable: Ring {
    fn variable(name: &str, pos: usize) -> Result<Self>;
    fn powi(&self, e: i64, pos: usize) -> Result<Self>;
    fn div_by(&self, d: &Self, pos: usize) -> Result<Self>;
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn pow_nonneg<T: Ring>(x: &T, e: i64) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc.mul_ref(x);
    }
    acc
}

impl Parsable for QSqrt2 {
    fn variable(name: &str, pos: usize) -> Result<Self> {
        Err(perr(
            pos,
            format!("unexpected identifier `{name}` in a Q(sqrt 2) scalar"),
        ))
    }
    fn powi(&self, e: i64, pos: usize) -> Result<Self> {
        if e >= 0 {
            Ok(pow_nonneg(self, e))
        } else {
            let inv = self
                .inv()
                .map_err(|_| perr(pos, "negative power of zero"))?;
            Ok(pow_nonneg(&inv, -e))
        }
    }
    fn div_by(&self, d: &Self, pos: usize) -> Result<Self> {
        let inv = d.inv().map_err(|_| perr(pos, "division by zero"))?;
        Ok(self.mul_ref(&inv))
    }
}

impl Parsable for MultiPoly {
    fn variable(name: &str, _pos: usize) -> Result<Self> {
        Ok(MultiPoly::var(name))
    }
    fn powi(&self, e: i64, pos: usize) -> Result<Self> {
        if e >= 0 {
            return Ok(pow_nonneg(self, e));
        }
        match self.as_constant() {
            Some(c) => Ok(MultiPoly::constant(c.powi(e, pos)?)),
            None => Err(perr(pos, "negative power of a non-constant polynomial")),
        }
    }
    fn div_by(&self, d: &Self, pos: usize) -> Result<Self> {
        match d.as_constant() {
            Some(c) => {
                let inv = c.inv().map_err(|_| perr(pos, "division by zero"))?;
                Ok(self.scale(&inv))
            }
            None => Err(perr(pos, "division by a non-constant polynomial")),
        }
    }
}

impl Parsable for LaurentExp {
    fn variable(name: &str, pos: usize) -> Result<Self> {
        if name == "E" {
            Ok(LaurentExp::monomial(QSqrt2::one(), 1))
        } else {
            Err(perr(
                pos,
                format!("unknown symbol `{name}`; only E is allowed"),
            ))
        }
    }
    fn powi(&self, e: i64, pos: usize) -> Result<Self> {
        if e >= 0 {
            return Ok(pow_nonneg(self, e));
        }
        let (c, k) = self
            .as_monomial()
            .ok_or_else(|| perr(pos, "negative power of a non-monomial"))?;
        let e32 = i32::try_from(e).map_err(|_| perr(pos, "exponent out of range"))?;
        Ok(LaurentExp::monomial(c.powi(e, pos)?, k * e32))
    }
    fn div_by(&self, d: &Self, pos: usize) -> Result<Self> {
        let (c, k) = d
            .as_monomial()
            .ok_or_else(|| perr(pos, "division by a non-monomial"))?;
        let inv = c.inv().map_err(|_| perr(pos, "division by zero"))?;
        Ok(self.mul_ref(&LaurentExp::monomial(inv, -k)))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(perr(self.pos, format!("expected `{}`", c as char)))
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(perr(start, "expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().expect("digits"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8(self.src[start..self.pos].to_vec()).unwrap()
    }

    fn expr<T: Parsable>(&mut self) -> Result<T> {
        let mut acc = if self.eat(b'-') {
            self.term::<T>()?.neg_ref()
        } else {
            self.eat(b'+');
            self.term::<T>()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc.add_ref(&self.term::<T>()?);
            } else if self.eat(b'-') {
                acc = acc.sub_ref(&self.term::<T>()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term<T: Parsable>(&mut self) -> Result<T> {
        let mut acc = self.unary::<T>()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul_ref(&self.unary::<T>()?);
            } else if self.peek() == Some(b'/') {
                let pos = self.pos;
                self.pos += 1;
                let d = self.unary::<T>()?;
                acc = acc.div_by(&d, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary<T: Parsable>(&mut self) -> Result<T> {
        if self.eat(b'-') {
            return Ok(self.unary::<T>()?.neg_ref());
        }
        let base = self.atom::<T>()?;
        if self.eat(b'^') {
            let pos = self.pos;
            let neg = self.eat(b'-');
            let e = self.integer()?;
            let e: i64 = e
                .try_into()
                .map_err(|_| perr(pos, "exponent out of range"))?;
            return base.powi(if neg { -e } else { e }, pos);
        }
        Ok(base)
    }

    fn atom<T: Parsable>(&mut self) -> Result<T> {
        let pos = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr::<T>()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(T::from_scalar(&QSqrt2::from_rational(
                    Rational::from_integer(n),
                )))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let name = self.ident();
                if name == "r2" {
                    return Ok(T::from_scalar(&QSqrt2::sqrt2()));
                }
                if name == "tr" && self.peek() == Some(b'(') {
                    self.pos += 1;
                    self.skip_ws();
                    let arg_pos = self.pos;
                    let arg = self.ident();
                    self.expect(b')')?;
                    let idx = arg
                        .strip_prefix('A')
                        .filter(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
                        .ok_or_else(|| perr(arg_pos, "tr() expects an argument of the form Ak"))?;
                    let a1 = T::variable(&format!("a{idx}1"), arg_pos)?;
                    let a4 = T::variable(&format!("a{idx}4"), arg_pos)?;
                    return Ok(a1.add_ref(&a4));
                }
                T::variable(&name, pos)
            }
            Some(c) => Err(perr(
                self.pos,
                format!("unexpected character `{}`", c as char),
            )),
            None => Err(perr(self.pos, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse_expr<T: Parsable>(s: &str) -> Result<T> {
    let mut p = Parser {
        src: s.as_bytes(),
        pos: 0,
    };
    let v = p.expr::<T>()?;
    if p.peek().is_some() {
        return Err(perr(p.pos, "trailing input"));
    }
    Ok(v)
}
