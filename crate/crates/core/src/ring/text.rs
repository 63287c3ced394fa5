//! Canonical text form of [`Scalar`].
//!
//! Terms appear in ascending monomial order and are written over the
//! user-facing variables `x`, `y`, `t`. Odd exponents of a half-power
//! variable print as halves, so `u` is `x^1/2` and `u²` is `x`:
//!
//! ```text
//! t^-1 - 1 + t
//! 1/2*x^1/2*y^-1/2
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Rational, RingError, Scalar, Var};

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for var in Var::ALL {
        let e = m.exponent(var);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(var.display_name())?;
        if e % 2 != 0 {
            write!(f, "^{e}/2")?;
        } else if e != 2 {
            write!(f, "^{}", e / 2)?;
        }
    }
    Ok(())
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn syntax(position: usize, message: impl Into<String>) -> RingError {
    RingError::Syntax { position, message: message.into() }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, RingError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        match ch {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                out.push((start, Tok::Int(n)));
            }
            'x' | 'y' | 't' => {
                out.push((i, Tok::Ident(ch)));
                i += 1;
            }
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            _ => return Err(syntax(i, format!("unexpected character `{ch}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn int(&mut self) -> Result<BigInt, RingError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => Err(syntax(at, "expected an integer")),
        }
    }

    fn expr(&mut self) -> Result<Scalar, RingError> {
        let mut acc = Scalar::zero();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            if negate {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek() {
                None => return Ok(acc),
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => return Err(syntax(self.offset(), "expected `+`, `-` or end of input")),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<Scalar, RingError> {
        let mut coef = Rational::one();
        let mut mono = Monomial::ONE;
        loop {
            let at = self.offset();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let den = if self.peek() == Some(&Tok::Slash) {
                        self.bump();
                        let d = self.int()?;
                        if d.is_zero() {
                            return Err(syntax(at, "zero denominator"));
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    coef *= Rational::new(n, den);
                }
                Some(Tok::Ident(c)) => {
                    let var = match c {
                        'x' => Var::U,
                        'y' => Var::V,
                        _ => Var::S,
                    };
                    let half_exp = if self.peek() == Some(&Tok::Caret) {
                        self.bump();
                        self.exponent()?
                    } else {
                        2
                    };
                    mono = mono.mul(&Monomial::var(var).pow(half_exp));
                }
                _ => return Err(syntax(at, "expected a number or one of `x`, `y`, `t`")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.bump();
            } else {
                return Ok(Scalar::term(coef, mono));
            }
        }
    }

    /// Parses `[-]p[/q]` and returns the exponent counted in half-units.
    fn exponent(&mut self) -> Result<i32, RingError> {
        let at = self.offset();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        let num = self.int()?;
        let den = if self.peek() == Some(&Tok::Slash) {
            self.bump();
            self.int()?
        } else {
            BigInt::one()
        };
        let doubled: BigInt = num * 2;
        if den.is_zero() || !(&doubled % &den).is_zero() {
            return Err(syntax(at, "exponent must be a multiple of 1/2"));
        }
        let half: i32 = (doubled / den)
            .try_into()
            .map_err(|_| syntax(at, "exponent out of range"))?;
        Ok(if negative { -half } else { half })
    }
}

impl FromStr for Scalar {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(syntax(0, "empty expression"));
        }
        let mut p = Parser { toks, pos: 0, end: s.len() };
        p.expr()
    }
}
