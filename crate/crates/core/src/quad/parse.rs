//! Recursive-descent parser for surd expressions.
//!
//! ```text
//! expr := term | "(" expr ")" "/" int
//! term := "[" sum "]" | sum
//! sum  := prod (("+" | "-") prod)*
//! prod := [int "*"] atom | int
//! atom := "sqrt" "(" int ")" | int | "(" sum ")"
//! int  := ["-"] digit+
//! ```
//!
//! Whitespace is ignored. A leading `-` in front of `sqrt` or `(` negates
//! the product that follows it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{square_free_decompose, QuadError, QuadValue, QuadraticIrrational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("at position {position}: {kind}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unexpected trailing input")]
    TrailingInput,
    #[error("negative radicand {0}")]
    NegativeRadicand(BigInt),
    #[error("radicand {0} exceeds the factoring bound")]
    RadicandTooLarge(BigInt),
    #[error("terms from different quadratic fields cannot be combined")]
    MixedRadicands,
    #[error("division by zero")]
    DivisionByZero,
}

/// Parses a surd expression into its canonical exact value.
pub fn parse_quadratic(expr: &str) -> Result<QuadValue, ParseError> {
    let mut parser = Parser {
        src: expr.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.error(ParseErrorKind::TrailingInput));
    }
    Ok(value.into_value())
}

/// `p + q·√d` with the radicand still unknown while `q = 0`.
#[derive(Clone, Debug)]
struct Val {
    p: Rational,
    q: Rational,
    d: Option<BigInt>,
}

impl Val {
    fn int(n: BigInt) -> Val {
        Val {
            p: Rational::from_integer(n),
            q: Rational::zero(),
            d: None,
        }
    }

    fn scale(self, k: &Rational) -> Val {
        let q = self.q * k;
        Val {
            p: self.p * k,
            d: if q.is_zero() { None } else { self.d },
            q,
        }
    }

    fn into_value(self) -> QuadValue {
        match self.d {
            Some(d) if !self.q.is_zero() => {
                QuadValue::Irrational(QuadraticIrrational { p: self.p, q: self.q, d })
            }
            _ => QuadValue::Rational(self.p),
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

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

    fn expect(&mut self, c: u8, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(ParseErrorKind::Expected(what)))
        }
    }

    fn starts_int(&mut self) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => true,
            Some(b'-') => {
                let mut i = self.pos + 1;
                while i < self.src.len() && self.src[i].is_ascii_whitespace() {
                    i += 1;
                }
                self.src.get(i).is_some_and(|c| c.is_ascii_digit())
            }
            _ => false,
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        let negative = self.eat(b'-');
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(ParseErrorKind::Expected("integer")));
        }
        // Only ASCII digits were consumed.
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or("0");
        let n: BigInt = digits.parse().unwrap_or_default();
        Ok(if negative { -n } else { n })
    }

    fn expr(&mut self) -> Result<Val, ParseError> {
        let save = self.pos;
        if self.eat(b'(') {
            if let Ok(inner) = self.expr() {
                if self.eat(b')') && self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let n = self.int()?;
                    if n.is_zero() {
                        return Err(ParseError {
                            position: at,
                            kind: ParseErrorKind::DivisionByZero,
                        });
                    }
                    return Ok(inner.scale(&Rational::new(BigInt::one(), n)));
                }
            }
            self.pos = save;
        }
        self.term()
    }

    fn term(&mut self) -> Result<Val, ParseError> {
        if self.eat(b'[') {
            let v = self.sum()?;
            self.expect(b']', "']'")?;
            Ok(v)
        } else {
            self.sum()
        }
    }

    fn sum(&mut self) -> Result<Val, ParseError> {
        let mut acc = self.prod()?;
        loop {
            let sign = match self.peek() {
                Some(b'+') => 1,
                Some(b'-') => -1,
                _ => return Ok(acc),
            };
            let op_pos = self.pos;
            self.pos += 1;
            let mut rhs = self.prod()?;
            if sign < 0 {
                rhs = rhs.scale(&-Rational::one());
            }
            acc = combine(acc, rhs).ok_or(ParseError {
                position: op_pos,
                kind: ParseErrorKind::MixedRadicands,
            })?;
        }
    }

    fn prod(&mut self) -> Result<Val, ParseError> {
        if self.starts_int() {
            let n = self.int()?;
            if self.eat(b'*') {
                let a = self.atom()?;
                return Ok(a.scale(&Rational::from_integer(n)));
            }
            return Ok(Val::int(n));
        }
        if self.eat(b'-') {
            let a = self.atom()?;
            return Ok(a.scale(&-Rational::one()));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Val, ParseError> {
        if self.starts_int() {
            return self.int().map(Val::int);
        }
        if self.eat(b'(') {
            let v = self.sum()?;
            self.expect(b')', "')'")?;
            return Ok(v);
        }
        self.skip_ws();
        if self.src[self.pos..].starts_with(b"sqrt") {
            self.pos += 4;
            self.expect(b'(', "'(' after sqrt")?;
            self.skip_ws();
            let at = self.pos;
            let n = self.int()?;
            self.expect(b')', "')'")?;
            return sqrt_val(n).map_err(|e| ParseError {
                position: at,
                kind: match e {
                    QuadError::NegativeRadicand(n) => ParseErrorKind::NegativeRadicand(n),
                    QuadError::RadicandTooLarge(n) => ParseErrorKind::RadicandTooLarge(n),
                    _ => ParseErrorKind::Expected("radicand"),
                },
            });
        }
        Err(self.error(ParseErrorKind::Expected("integer, 'sqrt' or '('")))
    }
}

fn sqrt_val(n: BigInt) -> Result<Val, QuadError> {
    if n.is_negative() {
        return Err(QuadError::NegativeRadicand(n));
    }
    let (square, free) = square_free_decompose(&n)?;
    if free.is_zero() || free.is_one() {
        return Ok(Val::int(square));
    }
    Ok(Val {
        p: Rational::zero(),
        q: Rational::from_integer(square),
        d: Some(free),
    })
}

fn combine(a: Val, b: Val) -> Option<Val> {
    let d = match (a.d, b.d) {
        (Some(x), Some(y)) if x != y => return None,
        (Some(x), _) | (None, Some(x)) => Some(x),
        (None, None) => None,
    };
    let q = a.q + b.q;
    Some(Val {
        p: a.p + b.p,
        d: if q.is_zero() { None } else { d },
        q,
    })
}
