//! Exact arithmetic in real quadratic fields `Q(√d)`.
//!
//! The slopes of irrational tori are restricted to quadratic irrationals so
//! that both the integer-Möbius relation and the GL₂(ℤ) relation between two
//! slopes become decidable with exact certificates.

mod cf;
mod mobius;
mod parse;

pub use cf::{cf_expand, ContinuedFraction};
pub use mobius::{gl2z_equivalent, mobius_apply, mobius_witness, same_field, MobiusWitness};
pub use parse::{parse_quadratic, ParseError, ParseErrorKind};

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Coefficient field for every exact computation in the crate.
pub type Rational = BigRational;

/// Trial division stops at this divisor; radicands that would need a larger
/// prime factor to be certified square-free are rejected.
pub const FACTORING_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    #[error("radicand {0} needs trial division beyond {FACTORING_BOUND}")]
    RadicandTooLarge(BigInt),
    #[error("negative radicand {0}")]
    NegativeRadicand(BigInt),
    #[error("Möbius denominator c + d·x vanishes (c = d = 0)")]
    ZeroDenominator,
    #[error("value is rational")]
    Rational,
}

/// Irrational number `p + q·√d` with `d ≥ 2` square-free and `q ≠ 0`.
///
/// The representation is canonical: two values are equal as reals exactly
/// when all three fields agree, so the derived `Eq`/`Hash` are value
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    p: Rational,
    q: Rational,
    d: BigInt,
}

/// Result of an operation that may collapse to a rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum QuadValue {
    Rational(Rational),
    Irrational(QuadraticIrrational),
}

impl QuadraticIrrational {
    /// Builds `p + q·√radicand`, folding the square part of the radicand into `q`.
    ///
    /// Returns the rational value when `q = 0` or the radicand is a perfect square.
    pub fn new(p: Rational, q: Rational, radicand: BigInt) -> Result<QuadValue, QuadError> {
        if radicand.is_negative() {
            return Err(QuadError::NegativeRadicand(radicand));
        }
        let (square, free) = square_free_decompose(&radicand)?;
        let q = q * Rational::from_integer(square);
        if q.is_zero() || free.is_zero() {
            return Ok(QuadValue::Rational(p));
        }
        if free.is_one() {
            return Ok(QuadValue::Rational(p + q));
        }
        Ok(QuadValue::Irrational(QuadraticIrrational { p, q, d: free }))
    }

    /// `√n` for an integer `n`.
    pub fn sqrt(n: i64) -> Result<QuadValue, QuadError> {
        Self::new(Rational::zero(), Rational::one(), BigInt::from(n))
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// The square-free radicand `d`.
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub(crate) fn elem(&self) -> Elem {
        Elem {
            p: self.p.clone(),
            q: self.q.clone(),
        }
    }

    pub(crate) fn field(&self) -> Field {
        Field { d: self.d.clone() }
    }

    /// Writes the value as `(r + s·√d) / t` with integers and `t > 0`.
    pub(crate) fn integer_form(&self) -> (BigInt, BigInt, BigInt) {
        let t = self.p.denom().lcm(self.q.denom());
        let r = self.p.numer() * (&t / self.p.denom());
        let s = self.q.numer() * (&t / self.q.denom());
        (r, s, t)
    }

    /// Exact floor.
    pub fn floor(&self) -> BigInt {
        self.field().floor(&self.elem())
    }

    /// Lossy decimal approximation, for display only.
    pub fn approx(&self) -> f64 {
        let root = approx_sqrt(self.d.to_f64().unwrap_or(f64::NAN));
        self.p.to_f64().unwrap_or(f64::NAN) + self.q.to_f64().unwrap_or(f64::NAN) * root
    }
}

impl TryFrom<QuadValue> for QuadraticIrrational {
    type Error = QuadError;

    fn try_from(value: QuadValue) -> Result<Self, Self::Error> {
        match value {
            QuadValue::Irrational(x) => Ok(x),
            QuadValue::Rational(_) => Err(QuadError::Rational),
        }
    }
}

impl QuadValue {
    pub fn as_irrational(&self) -> Option<&QuadraticIrrational> {
        match self {
            QuadValue::Irrational(x) => Some(x),
            QuadValue::Rational(_) => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, QuadValue::Rational(_))
    }

    pub(crate) fn from_elem(e: Elem, d: &BigInt) -> QuadValue {
        if e.q.is_zero() {
            QuadValue::Rational(e.p)
        } else {
            QuadValue::Irrational(QuadraticIrrational {
                p: e.p,
                q: e.q,
                d: d.clone(),
            })
        }
    }
}

// Newton iteration; `f64::sqrt` needs std.
fn approx_sqrt(x: f64) -> f64 {
    if x.is_nan() || x <= 0.0 {
        return 0.0;
    }
    let mut r = if x > 1.0 { x / 2.0 } else { 1.0 };
    for _ in 0..64 {
        r = 0.5 * (r + x / r);
    }
    r
}

/// Splits `n ≥ 0` into `(s, f)` with `n = s²·f` and `f` square-free.
pub fn square_free_decompose(n: &BigInt) -> Result<(BigInt, BigInt), QuadError> {
    if n.is_zero() {
        return Ok((BigInt::zero(), BigInt::zero()));
    }
    if let Some(small) = n.to_u64() {
        return decompose_u64(small)
            .map(|(s, f)| (BigInt::from(s), BigInt::from(f)))
            .ok_or_else(|| QuadError::RadicandTooLarge(n.clone()));
    }
    let mut rest = n.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        if p > BigInt::from(FACTORING_BOUND) {
            return Err(QuadError::RadicandTooLarge(n.clone()));
        }
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            square *= &p;
        }
        if e % 2 == 1 {
            free *= &p;
        }
        p += 1u32;
    }
    Ok((square, free * rest))
}

fn decompose_u64(n: u64) -> Option<(u64, u64)> {
    let mut rest = n;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if p > FACTORING_BOUND {
            return None;
        }
        let mut e = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Some((square, free * rest))
}

/// Element `p + q·√d` of a field whose radicand is carried by [`Field`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Elem {
    pub(crate) p: Rational,
    pub(crate) q: Rational,
}

impl Elem {
    pub(crate) fn rational(r: Rational) -> Elem {
        Elem {
            p: r,
            q: Rational::zero(),
        }
    }

    pub(crate) fn integer(n: &BigInt) -> Elem {
        Elem::rational(Rational::from_integer(n.clone()))
    }

    pub(crate) fn add(&self, other: &Elem) -> Elem {
        Elem {
            p: &self.p + &other.p,
            q: &self.q + &other.q,
        }
    }

    pub(crate) fn sub(&self, other: &Elem) -> Elem {
        Elem {
            p: &self.p - &other.p,
            q: &self.q - &other.q,
        }
    }

    pub(crate) fn scale(&self, k: &Rational) -> Elem {
        Elem {
            p: &self.p * k,
            q: &self.q * k,
        }
    }
}

/// The real quadratic field `Q(√d)` for a square-free `d ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Field {
    pub(crate) d: BigInt,
}

impl Field {
    fn d_rat(&self) -> Rational {
        Rational::from_integer(self.d.clone())
    }

    pub(crate) fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        Elem {
            p: &x.p * &y.p + &x.q * &y.q * self.d_rat(),
            q: &x.p * &y.q + &x.q * &y.p,
        }
    }

    pub(crate) fn norm(&self, x: &Elem) -> Rational {
        &x.p * &x.p - &x.q * &x.q * self.d_rat()
    }

    /// Multiplicative inverse; `None` only for zero (the norm of a nonzero
    /// element is nonzero because `d` is not a square).
    pub(crate) fn inv(&self, x: &Elem) -> Option<Elem> {
        let n = self.norm(x);
        if n.is_zero() {
            return None;
        }
        Some(Elem {
            p: &x.p / &n,
            q: -(&x.q / &n),
        })
    }

    pub(crate) fn div(&self, x: &Elem, y: &Elem) -> Option<Elem> {
        self.inv(y).map(|yi| self.mul(x, &yi))
    }

    /// `(m00·x + m01) / (m10·x + m11)`.
    pub(crate) fn act(&self, m: &[[BigInt; 2]; 2], x: &Elem) -> Option<Elem> {
        let num = x
            .scale(&Rational::from_integer(m[0][0].clone()))
            .add(&Elem::integer(&m[0][1]));
        let den = x
            .scale(&Rational::from_integer(m[1][0].clone()))
            .add(&Elem::integer(&m[1][1]));
        self.div(&num, &den)
    }


    /// Exact floor of `p + q·√d`.
    pub(crate) fn floor(&self, x: &Elem) -> BigInt {
        let t = x.p.denom().lcm(x.q.denom());
        let r = x.p.numer() * (&t / x.p.denom());
        let s = x.q.numer() * (&t / x.q.denom());
        if s.is_zero() {
            return r.div_floor(&t);
        }
        // r + s√d lies strictly between consecutive integers around r ± isqrt(s²d).
        let n = &s * &s * &self.d;
        let f = n.sqrt();
        if s.is_positive() {
            (r + f).div_floor(&t)
        } else {
            (r - f - BigInt::one()).div_floor(&t)
        }
    }
}

fn fmt_rational(r: &Rational) -> String {
    use alloc::format;
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Prints in the parser's own grammar, so `parse_quadratic(x.to_string()) == x`.
impl fmt::Display for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (r, s, t) = self.integer_form();
        let mut body = String::new();
        use core::fmt::Write;
        if !r.is_zero() {
            write!(body, "{}", r)?;
        }
        let abs = s.abs();
        let sign = if s.is_negative() { "-" } else if r.is_zero() { "" } else { "+" };
        if abs.is_one() {
            write!(body, "{}sqrt({})", sign, self.d)?;
        } else {
            write!(body, "{}{}*sqrt({})", sign, abs, self.d)?;
        }
        if t.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({})/{}", body, t)
        }
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadValue::Rational(r) => f.write_str(&fmt_rational(r)),
            QuadValue::Irrational(x) => x.fmt(f),
        }
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
