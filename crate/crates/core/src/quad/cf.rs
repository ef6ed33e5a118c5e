//! Eventually periodic continued fractions of quadratic irrationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{Elem, Field, QuadError, QuadValue, QuadraticIrrational, Rational};

/// `[a₀; a₁, …, a_{k-1}, (b₀, …, b_{l-1})]`.
///
/// The integer part `a₀` always sits in the preperiod, so the preperiod is
/// never empty. Both parts are kept minimal: the period is primitive and no
/// preperiod entry after `a₀` can be rotated into the period.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    preperiod: Vec<BigInt>,
    period: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("preperiod must contain the integer part")]
    EmptyPreperiod,
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("partial quotient {0} after the integer part is not positive")]
    NonPositive(BigInt),
}

impl ContinuedFraction {
    /// Builds an expansion from raw parts and reduces it to minimal form.
    pub fn from_parts(preperiod: Vec<BigInt>, period: Vec<BigInt>) -> Result<Self, CfError> {
        if preperiod.is_empty() {
            return Err(CfError::EmptyPreperiod);
        }
        if period.is_empty() {
            return Err(CfError::EmptyPeriod);
        }
        if let Some(bad) = preperiod[1..]
            .iter()
            .chain(period.iter())
            .find(|a| !a.is_positive())
        {
            return Err(CfError::NonPositive(bad.clone()));
        }
        let mut cf = ContinuedFraction { preperiod, period };
        cf.minimize();
        Ok(cf)
    }

    fn minimize(&mut self) {
        let l = self.period.len();
        if let Some(root) = (1..=l)
            .filter(|r| l.is_multiple_of(*r))
            .find(|&r| (r..l).all(|i| self.period[i] == self.period[i - r]))
        {
            self.period.truncate(root);
        }
        // a₀ stays put even when it would match the period.
        while self.preperiod.len() > 1 && self.preperiod.last() == self.period.last() {
            self.preperiod.pop();
            self.period.rotate_right(1);
        }
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.preperiod
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    /// Reconstructs the exact value: the period's fixed point, folded
    /// through the preperiod.
    pub fn value(&self) -> Result<QuadraticIrrational, QuadError> {
        let m = partial_quotient_product(&self.period);
        // y = (m00 y + m01)/(m10 y + m11), y > 1:
        // m10 y² + (m11 - m00) y - m01 = 0.
        // Divided by its content so the discriminant stays as small as the
        // minimal polynomial's; the unreduced one carries large square factors.
        let g = m[1][0].gcd(&(&m[1][1] - &m[0][0])).gcd(&m[0][1]);
        let a = &m[1][0] / &g;
        let b = (&m[1][1] - &m[0][0]) / &g;
        let c = &m[0][1] / &g;
        let disc = &b * &b + BigInt::from(4) * &a * &c;
        let two_a = Rational::from_integer(BigInt::from(2) * &a);
        let tail = QuadraticIrrational::new(
            Rational::from_integer(-b) / &two_a,
            Rational::one() / &two_a,
            disc,
        )?;
        let tail = QuadraticIrrational::try_from(tail)?;
        let pre = partial_quotient_product(&self.preperiod);
        let field = tail.field();
        let x = field.act(&pre, &tail.elem()).ok_or(QuadError::ZeroDenominator)?;
        QuadraticIrrational::try_from(QuadValue::from_elem(x, &field.d))
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.preperiod[0])?;
        let mut sep = "; ";
        for a in &self.preperiod[1..] {
            write!(f, "{}{}", sep, a)?;
            sep = ", ";
        }
        f.write_str(sep)?;
        f.write_str("(")?;
        for (i, a) in self.period.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", a)?;
        }
        f.write_str(")]")
    }
}

/// `∏ [[aᵢ, 1], [1, 0]]`, the matrix taking the tail after the listed
/// quotients to the value before them.
pub(crate) fn partial_quotient_product(quotients: &[BigInt]) -> [[BigInt; 2]; 2] {
    let mut m = [
        [BigInt::one(), BigInt::zero()],
        [BigInt::zero(), BigInt::one()],
    ];
    for a in quotients {
        // m · [[a, 1], [1, 0]]
        let c0 = [&m[0][0] * a + &m[0][1], &m[1][0] * a + &m[1][1]];
        m = [
            [c0[0].clone(), m[0][0].clone()],
            [c0[1].clone(), m[1][0].clone()],
        ];
    }
    m
}

/// Surd state `(P + √N)/Q` of the classical recurrence.
struct SurdState {
    p: BigInt,
    q: BigInt,
    n: BigInt,
    root_floor: BigInt,
}

impl SurdState {
    fn new(x: &QuadraticIrrational) -> SurdState {
        let (r, s, t) = x.integer_form();
        let n = &s * &s * x.radicand();
        let (mut p, mut q, mut n) = if s.is_positive() { (r, t, n) } else { (-r, -t, n) };
        if !(&n - &p * &p).is_multiple_of(&q) {
            let k = q.abs();
            p *= &k;
            n *= &k * &k;
            q *= &k;
        }
        let root_floor = n.sqrt();
        SurdState { p, q, n, root_floor }
    }

    fn quotient(&self) -> BigInt {
        if self.q.is_positive() {
            (&self.p + &self.root_floor).div_floor(&self.q)
        } else {
            (&self.p + &self.root_floor + BigInt::one()).div_floor(&self.q)
        }
    }

    fn advance(&mut self, a: &BigInt) {
        let p = a * &self.q - &self.p;
        let q = (&self.n - &p * &p) / &self.q;
        self.p = p;
        self.q = q;
    }
}

/// Expands a quadratic irrational, stopping at the first repeated surd state.
pub fn cf_expand(x: &QuadraticIrrational) -> ContinuedFraction {
    let mut state = SurdState::new(x);
    let mut quotients = Vec::new();
    let mut seen: BTreeMap<(BigInt, BigInt), usize> = BTreeMap::new();
    loop {
        let k = quotients.len();
        if k >= 1 {
            if let Some(&i) = seen.get(&(state.p.clone(), state.q.clone())) {
                let period = quotients.split_off(i);
                return ContinuedFraction {
                    preperiod: quotients,
                    period,
                };
            }
            seen.insert((state.p.clone(), state.q.clone()), k);
        }
        let a = state.quotient();
        state.advance(&a);
        quotients.push(a);
    }
}

/// Complete quotients `x₀, x₁, …, x_{count-1}` as exact field elements.
pub(crate) fn complete_quotients(x: &QuadraticIrrational, count: usize) -> Vec<Elem> {
    let field: Field = x.field();
    let mut out = Vec::with_capacity(count);
    let mut cur = x.elem();
    for _ in 0..count {
        let a = field.floor(&cur);
        out.push(cur.clone());
        let frac = cur.sub(&Elem::integer(&a));
        // Irrational, so the fractional part is never zero.
        cur = match field.inv(&frac) {
            Some(v) => v,
            None => break,
        };
    }
    out
}
