//! Polynomial maps in text form: components separated by `;`, each a sum of
//! monomials with optional rational coefficients, e.g. `x1^2+x2^2; 0` or
//! `3/5*x1 - 4/5*x2; 4/5*x1 + 3/5*x2`.
//!
//! ```text
//! map    := comp (";" comp)*
//! comp   := ["+" | "-"] term (("+" | "-") term)*
//! term   := coeff ["*" factors] | factors
//! coeff  := uint ["/" uint]
//! factors:= factor ("*" factor)*
//! factor := "x" uint ["^" uint]
//! ```

use difftangent::orbit::PolyLift;
use difftangent::poly::MultiPoly;
use difftangent::quad::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::spec::SpecError;

type Monomial = (Rational, Vec<(usize, u32)>);

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

    fn err(&self, msg: &str) -> SpecError {
        SpecError {
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn uint(&mut self) -> Result<BigInt, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("ascii digits parse"))
    }

    fn small(&mut self, what: &str) -> Result<u32, SpecError> {
        let at = self.pos;
        let n = self.uint()?;
        u32::try_from(&n).map_err(|_| SpecError {
            position: at,
            message: format!("{what} out of range"),
        })
    }

    fn factor(&mut self) -> Result<(usize, u32), SpecError> {
        if !self.eat(b'x') {
            return Err(self.err("expected a variable x<i>"));
        }
        let at = self.pos;
        let i = self.small("variable index")?;
        if i == 0 {
            return Err(SpecError {
                position: at,
                message: "variables are numbered from x1".to_string(),
            });
        }
        let e = if self.eat(b'^') { self.small("exponent")? } else { 1 };
        Ok((i as usize, e))
    }

    fn term(&mut self) -> Result<Monomial, SpecError> {
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num = self.uint()?;
            let den = if self.eat(b'/') {
                let at = self.pos;
                let d = self.uint()?;
                if d.is_zero() {
                    return Err(SpecError {
                        position: at,
                        message: "division by zero".to_string(),
                    });
                }
                d
            } else {
                BigInt::one()
            };
            coeff = Rational::new(num, den);
            if !self.eat(b'*') {
                return Ok((coeff, factors));
            }
        }
        factors.push(self.factor()?);
        while self.eat(b'*') {
            factors.push(self.factor()?);
        }
        Ok((coeff, factors))
    }

    fn component(&mut self) -> Result<Vec<Monomial>, SpecError> {
        let mut terms = Vec::new();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, f) = self.term()?;
            terms.push((if negative { -c } else { c }, f));
            if self.eat(b'+') {
                negative = false;
            } else if self.eat(b'-') {
                negative = true;
            } else {
                return Ok(terms);
            }
        }
    }
}

/// Parses a polynomial map. The source dimension is the largest variable
/// index, raised to `min_vars` when given.
pub fn parse_lift(text: &str, min_vars: Option<usize>) -> Result<PolyLift, SpecError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut comps = vec![p.component()?];
    while p.eat(b';') {
        comps.push(p.component()?);
    }
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    let used = comps
        .iter()
        .flatten()
        .flat_map(|(_, f)| f.iter().map(|(i, _)| *i))
        .max()
        .unwrap_or(1);
    let m = match min_vars {
        Some(m) if m < used => {
            return Err(SpecError {
                position: 0,
                message: format!("map uses x{used} but --m is {m}"),
            })
        }
        Some(m) => m,
        None => used,
    };
    let components = comps
        .into_iter()
        .map(|terms| {
            terms.into_iter().fold(MultiPoly::zero(m), |acc, (c, f)| {
                let mut e = vec![0u32; m];
                for (i, k) in f {
                    e[i - 1] += k;
                }
                acc.add(&MultiPoly::monomial(e, c))
            })
        })
        .collect();
    PolyLift::new(m, components).map_err(|e| SpecError {
        position: 0,
        message: e.to_string(),
    })
}
