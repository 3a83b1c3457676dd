//! The number-literal grammar:
//!
//! ```text
//! number   := term (("+" | "-") term)*
//! term     := coeff | coeff "t" ("^" exponent)? | "t" ("^" exponent)?
//! coeff    := integer ("/" integer)?
//! exponent := integer ("/" integer)?          (integer may carry a "-")
//! ```
//!
//! e.g. `1 - t^2 + 2t`, `t^-1`, `3/2 + 5t^1/2`. A leading sign is allowed.
//! Two extensions make every value printable and re-parseable: an interval
//! coefficient `[lo, hi]` and a remainder term `O(t^T)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::error::ParseError;
use super::number::{LeviCivita, Term, Truncation};
use crate::interval::CoefficientInterval;
use crate::rational::{fmt_rational, Rational};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    pub(crate) fn peek_ws(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek_ws() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek_ws().is_none()
    }

    pub(crate) fn rest_starts_with(&self, s: &str) -> bool {
        self.src[self.pos..].starts_with(s)
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    pub(crate) fn unsigned_integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(start, "expected digits"));
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }

    /// `integer ("/" integer)?` without sign.
    pub(crate) fn unsigned_rational(&mut self) -> Result<Rational, ParseError> {
        let n = self.unsigned_integer()?;
        let save = self.pos;
        if self.eat('/') && matches!(self.peek_ws(), Some(c) if c.is_ascii_digit()) {
            let at = self.pos;
            let d = self.unsigned_integer()?;
            if d.is_zero() {
                return Err(ParseError::new(at, "zero denominator"));
            }
            return Ok(Rational::new(n, d));
        }
        self.pos = save;
        Ok(Rational::from_integer(n))
    }

    pub(crate) fn signed_rational(&mut self) -> Result<Rational, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let q = self.unsigned_rational()?;
        Ok(if negative { -q } else { q })
    }

    /// `exponent := "-"? integer ("/" integer)?`, optionally parenthesized.
    pub(crate) fn exponent(&mut self) -> Result<Rational, ParseError> {
        if self.eat('(') {
            let q = self.signed_rational()?;
            self.expect(')')?;
            Ok(q)
        } else {
            self.signed_rational()
        }
    }

    /// `"t" ("^" exponent)?` after the `t` was consumed.
    pub(crate) fn t_power(&mut self) -> Result<Rational, ParseError> {
        if self.eat('^') {
            self.exponent()
        } else {
            Ok(Rational::one())
        }
    }

    /// `"[" rational "," rational "]"` after the `[` was consumed.
    pub(crate) fn interval_body(&mut self) -> Result<CoefficientInterval, ParseError> {
        let at = self.pos;
        let lo = self.signed_rational()?;
        self.expect(',')?;
        let hi = self.signed_rational()?;
        self.expect(']')?;
        CoefficientInterval::new(lo, hi).ok_or_else(|| ParseError::new(at, "interval bounds out of order"))
    }

    /// `"O" "(" "t" ("^" exponent)? ")"` after the `O` was consumed.
    pub(crate) fn remainder_body(&mut self) -> Result<Rational, ParseError> {
        self.expect('(')?;
        self.expect('t')?;
        let e = self.t_power()?;
        self.expect(')')?;
        Ok(e)
    }
}

enum Piece {
    Term(Term),
    Remainder(Rational),
}

fn parse_term(cur: &mut Cursor<'_>, negative: bool) -> Result<Piece, ParseError> {
    let sign = |c: CoefficientInterval| if negative { -c } else { c };
    match cur.peek_ws() {
        Some('O') => {
            // The sign of a remainder is irrelevant.
            cur.bump();
            Ok(Piece::Remainder(cur.remainder_body()?))
        }
        Some('t') => {
            cur.bump();
            let e = cur.t_power()?;
            Ok(Piece::Term(Term::new(e, sign(CoefficientInterval::from_int(1)))))
        }
        Some(c) if c.is_ascii_digit() || c == '[' => {
            let coeff = if c == '[' {
                cur.bump();
                cur.interval_body()?
            } else {
                CoefficientInterval::exact(cur.unsigned_rational()?)
            };
            let e = if cur.eat('t') { cur.t_power()? } else { Rational::zero() };
            Ok(Piece::Term(Term::new(e, sign(coeff))))
        }
        Some(_) => Err(cur.error("expected a term")),
        None => Err(cur.error("unexpected end of input")),
    }
}

/// Parses a number literal.
pub fn parse_number(src: &str) -> Result<LeviCivita, ParseError> {
    let mut cur = Cursor::new(src);
    let mut terms = Vec::new();
    let mut truncation = Truncation::Infinite;
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        match parse_term(&mut cur, negative)? {
            Piece::Term(t) => terms.push(t),
            Piece::Remainder(e) => truncation = truncation.min(Truncation::Finite(e)),
        }
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else if cur.at_end() {
            break;
        } else {
            return Err(cur.error("expected '+', '-' or end of input"));
        }
    }
    Ok(LeviCivita::from_terms(terms, truncation))
}

impl std::str::FromStr for LeviCivita {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_number(s)
    }
}

fn t_part(exponent: &Rational) -> String {
    if exponent.is_zero() {
        String::new()
    } else if exponent.is_one() {
        "t".to_string()
    } else {
        format!("t^{}", fmt_rational(exponent))
    }
}

/// Prints `x` in the literal grammar. With `decimal_digits`, interval
/// coefficients are shown as outward-rounded decimals instead (readable, but
/// no longer re-parseable).
pub fn format_number(x: &LeviCivita, decimal_digits: Option<u32>) -> String {
    let mut out = String::new();
    for (i, term) in x.terms().iter().enumerate() {
        let (negative, body) = match term.coeff.as_exact() {
            Some(q) => {
                let mag = q.abs();
                let coeff = if mag.is_one() && !term.exponent.is_zero() { String::new() } else { fmt_rational(&mag) };
                (q.is_negative(), coeff)
            }
            None => (
                false,
                match decimal_digits {
                    Some(d) => term.coeff.to_decimal(d),
                    None => term.coeff.to_string(),
                },
            ),
        };
        let text = format!("{body}{}", t_part(&term.exponent));
        match (i, negative) {
            (0, true) => out.push_str(&format!("-{text}")),
            (0, false) => out.push_str(&text),
            (_, true) => out.push_str(&format!(" - {text}")),
            (_, false) => out.push_str(&format!(" + {text}")),
        }
    }
    if let Truncation::Finite(e) = x.truncation() {
        let rem = format!("O({})", if e.is_zero() { "t^0".to_string() } else { t_part(e) });
        if out.is_empty() {
            out = rem;
        } else {
            out.push_str(&format!(" + {rem}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
