//! Arithmetic expressions over number literals, as accepted by `ihull eval`.
//!
//! ```text
//! sum     := product (("+" | "-") product)*
//! product := unary (("*" | "/") unary)*
//! unary   := ("+" | "-") unary | power
//! power   := atom ("^" integer)?
//! atom    := literal-term | "(" sum ")" | "pi" | func "(" sum ")"
//! func    := "sqrt" | "cos" | "sin"
//! ```
//!
//! Literal terms follow the number grammar, so `t^1/2` is `t` to the power
//! one half (the exponent is read greedily).

use num_traits::{Signed, ToPrimitive, Zero};

use super::error::{LcError, ParseError};
use super::literal::Cursor;
use super::number::{LeviCivita, Term, Truncation};
use super::series::pi_constant;
use super::Precision;
use crate::interval::CoefficientInterval;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("evaluation failed at position {position}: {source}")]
    Arithmetic { position: usize, source: LcError },
}

struct Evaluator<'a, 'p> {
    cur: Cursor<'a>,
    precision: &'p Precision,
}

impl Evaluator<'_, '_> {
    fn arith<T>(&self, at: usize, r: Result<T, LcError>) -> Result<T, EvalError> {
        r.map_err(|source| EvalError::Arithmetic { position: at, source })
    }

    fn sum(&mut self) -> Result<LeviCivita, EvalError> {
        let mut acc = self.product()?;
        loop {
            if self.cur.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.cur.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<LeviCivita, EvalError> {
        let mut acc = self.unary()?;
        loop {
            if self.cur.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.cur.eat('/') {
                let at = self.cur.pos;
                let rhs = self.unary()?;
                acc = self.arith(at, acc.div(&rhs, &self.precision.order))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<LeviCivita, EvalError> {
        if self.cur.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.cur.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<LeviCivita, EvalError> {
        let base = self.atom()?;
        if !self.cur.eat('^') {
            return Ok(base);
        }
        let at = self.cur.pos;
        let e = self.cur.signed_rational()?;
        if !e.is_integer() {
            return Err(ParseError::new(at, "only integer powers of expressions are supported").into());
        }
        let n = e.to_integer().abs().to_u32().ok_or_else(|| ParseError::new(at, "exponent too large"))?;
        let p = base.pow(n);
        if e.is_negative() {
            self.arith(at, p.inverse(&self.precision.order))
        } else {
            Ok(p)
        }
    }

    fn identifier(&mut self) -> String {
        let mut name = String::new();
        while let Some(c) = self.cur.peek() {
            if c.is_ascii_alphabetic() {
                name.push(c);
                self.cur.bump();
            } else {
                break;
            }
        }
        name
    }

    fn atom(&mut self) -> Result<LeviCivita, EvalError> {
        let at = {
            self.cur.skip_ws();
            self.cur.pos
        };
        match self.cur.peek() {
            Some('(') => {
                self.cur.bump();
                let v = self.sum()?;
                self.cur.expect(')')?;
                Ok(v)
            }
            Some('[') => {
                self.cur.bump();
                let c = self.cur.interval_body()?;
                self.t_suffix(c)
            }
            Some(c) if c.is_ascii_digit() => {
                let q = self.cur.unsigned_rational()?;
                self.t_suffix(CoefficientInterval::exact(q))
            }
            Some('O') if self.cur.rest_starts_with("O(") => {
                self.cur.bump();
                let e = self.cur.remainder_body()?;
                Ok(LeviCivita::big_o(e))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.identifier();
                match name.as_str() {
                    "t" => {
                        let e = self.cur.t_power()?;
                        Ok(LeviCivita::t_pow(e))
                    }
                    "pi" => Ok(pi_constant(self.precision.bits)),
                    "sqrt" | "cos" | "sin" => {
                        self.cur.expect('(')?;
                        let arg = self.sum()?;
                        self.cur.expect(')')?;
                        let Precision { order, bits } = self.precision;
                        let r = match name.as_str() {
                            "sqrt" => arg.sqrt(order, *bits),
                            "cos" => arg.cos_enclosure(order, *bits),
                            _ => arg.sin_enclosure(order, *bits),
                        };
                        self.arith(at, r)
                    }
                    _ => Err(ParseError::new(at, format!("unknown identifier '{name}'")).into()),
                }
            }
            Some(_) => Err(ParseError::new(at, "expected a number, 't', '(' or a function").into()),
            None => Err(ParseError::new(at, "unexpected end of input").into()),
        }
    }

    /// Optional `t^e` directly after a coefficient (`5t`, `[1, 2]t^3`).
    fn t_suffix(&mut self, coeff: CoefficientInterval) -> Result<LeviCivita, EvalError> {
        let save = self.cur.pos;
        self.cur.skip_ws();
        if self.cur.peek() == Some('t') {
            self.cur.bump();
            if !matches!(self.cur.peek(), Some(c) if c.is_ascii_alphabetic()) {
                let e = self.cur.t_power()?;
                return Ok(LeviCivita::from_terms(vec![Term::new(e, coeff)], Truncation::Infinite));
            }
        }
        self.cur.pos = save;
        Ok(LeviCivita::from_terms(vec![Term::new(Rational::zero(), coeff)], Truncation::Infinite))
    }
}

/// Evaluates an arithmetic expression at the given precision.
pub fn evaluate(src: &str, precision: &Precision) -> Result<LeviCivita, EvalError> {
    let mut ev = Evaluator { cur: Cursor::new(src), precision };
    let v = ev.sum()?;
    if !ev.cur.at_end() {
        return Err(ev.cur.error("unexpected trailing input").into());
    }
    Ok(v)
}
