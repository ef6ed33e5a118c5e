//! Integer Möbius relations between quadratic irrationals.
//!
//! For irrational `x = (a + b·y)/(c + d·y)` the matrix must be nonsingular
//! (a singular one makes `x` rational), so `x ∈ Q(y)` and the two values
//! share a square-free radicand. Conversely, inside one field
//! `x = p₁ + q₁√D`, `y = p₂ + q₂√D` gives the affine relation
//! `x = (q₁/q₂)(y − p₂) + p₁`. Integer-Möbius relatedness is therefore
//! exactly [`same_field`].
//!
//! The unimodular case (`ad − bc = ±1`) is decided by comparing continued
//! fraction tails.

use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::cf::{complete_quotients, partial_quotient_product};
use super::{cf_expand, QuadError, QuadValue, QuadraticIrrational, Rational};

/// Integer quadruple with `x = (a + b·y)/(c + d·y)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusWitness {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
    det: BigInt,
}

impl MobiusWitness {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let det = &a * &d - &b * &c;
        MobiusWitness { a, b, c, d, det }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::from_i64(0, 1, 1, 0)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    /// `ad − bc`.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    pub fn is_unimodular(&self) -> bool {
        self.det.abs().is_one()
    }

    /// Matrix acting as `y ↦ (m00·y + m01)/(m10·y + m11)`.
    fn matrix(&self) -> [[BigInt; 2]; 2] {
        [
            [self.b.clone(), self.a.clone()],
            [self.d.clone(), self.c.clone()],
        ]
    }

    fn from_matrix(m: [[BigInt; 2]; 2]) -> Self {
        let [[b, a], [d, c]] = m;
        Self::new(a, b, c, d)
    }

    /// Scales so that `c > 0`, or `d > 0` when `c = 0`. Projectively the same map.
    fn normalized(self) -> Self {
        let flip = self.c.is_negative() || (self.c.is_zero() && self.d.is_negative());
        if flip {
            Self::new(-self.a, -self.b, -self.c, -self.d)
        } else {
            self
        }
    }

    /// Slope `b/c` of the affine form `x = (b/c)·y + a/c`, when `d = 0`.
    pub fn affine_slope(&self) -> Option<Rational> {
        if self.d.is_zero() && !self.c.is_zero() {
            Some(Rational::new(self.b.clone(), self.c.clone()))
        } else {
            None
        }
    }
}

impl fmt::Display for MobiusWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a, b, c, d) = ({}, {}, {}, {}), det = {}",
            self.a, self.b, self.c, self.d, self.det
        )
    }
}

/// `(a + b·x)/(c + d·x)`, exactly.
pub fn mobius_apply(w: &MobiusWitness, x: &QuadraticIrrational) -> Result<QuadValue, QuadError> {
    if w.c.is_zero() && w.d.is_zero() {
        return Err(QuadError::ZeroDenominator);
    }
    let field = x.field();
    let y = field
        .act(&w.matrix(), &x.elem())
        .ok_or(QuadError::ZeroDenominator)?;
    Ok(QuadValue::from_elem(y, &field.d))
}

pub fn same_field(x: &QuadraticIrrational, y: &QuadraticIrrational) -> bool {
    x.radicand() == y.radicand()
}

/// Affine witness `x = (a + b·y)/c` with `d = 0`, `c > 0` and
/// `gcd(a, b, c) = 1`, or `None` when the fields differ.
pub fn mobius_witness(x: &QuadraticIrrational, y: &QuadraticIrrational) -> Option<MobiusWitness> {
    if !same_field(x, y) {
        return None;
    }
    let slope = x.q() / y.q();
    let offset = x.p() - &slope * y.p();
    let c = slope.denom().lcm(offset.denom());
    let a = offset.numer() * (&c / offset.denom());
    let b = slope.numer() * (&c / slope.denom());
    let g = a.gcd(&b).gcd(&c);
    Some(MobiusWitness::new(a / &g, b / &g, c / &g, BigInt::zero()))
}

/// Unimodular witness via a common continued-fraction tail, or `None`.
///
/// Picks the lexicographically smallest pair of indices `(i, j)` whose
/// complete quotients `xᵢ = yⱼ` coincide, then composes the partial-quotient
/// matrices of `x` up to `i` with the inverse of those of `y` up to `j`.
pub fn gl2z_equivalent(
    x: &QuadraticIrrational,
    y: &QuadraticIrrational,
) -> Option<MobiusWitness> {
    if !same_field(x, y) {
        return None;
    }
    let cx = cf_expand(x);
    let cy = cf_expand(y);
    if !is_rotation(cx.period(), cy.period()) {
        return None;
    }
    let nx = cx.preperiod().len() + cx.period().len();
    let ny = cy.preperiod().len() + cy.period().len();
    let qx = complete_quotients(x, nx);
    let qy = complete_quotients(y, ny);
    let (i, j) = (0..qx.len())
        .flat_map(|i| (0..qy.len()).map(move |j| (i, j)))
        .find(|&(i, j)| qx[i] == qy[j])?;
    let ax = expansion_prefix(&cx, i);
    let ay = expansion_prefix(&cy, j);
    let mx = partial_quotient_product(&ax);
    let my = partial_quotient_product(&ay);
    // adj(M_y) inverts M_y up to the sign det(M_y) = ±1.
    let adj = [
        [my[1][1].clone(), -&my[0][1]],
        [-&my[1][0], my[0][0].clone()],
    ];
    let w = mat_mul(&mx, &adj);
    Some(MobiusWitness::from_matrix(w).normalized())
}

fn expansion_prefix(cf: &super::ContinuedFraction, len: usize) -> alloc::vec::Vec<BigInt> {
    cf.preperiod()
        .iter()
        .chain(cf.period().iter().cycle())
        .take(len)
        .cloned()
        .collect()
}

fn is_rotation(a: &[BigInt], b: &[BigInt]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|r| (0..a.len()).all(|k| a[(k + r) % a.len()] == b[k]))
}

fn mat_mul(x: &[[BigInt; 2]; 2], y: &[[BigInt; 2]; 2]) -> [[BigInt; 2]; 2] {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{parse_quadratic, rat};

    fn irr(s: &str) -> QuadraticIrrational {
        parse_quadratic(s).unwrap().as_irrational().unwrap().clone()
    }

    fn val(s: &str) -> QuadValue {
        parse_quadratic(s).unwrap()
    }

    #[test]
    fn apply_examples() {
        let r2 = irr("sqrt(2)");
        assert_eq!(mobius_apply(&MobiusWitness::from_i64(0, 1, 1, 0), &r2).unwrap(), val("sqrt(2)"));
        assert_eq!(mobius_apply(&MobiusWitness::from_i64(1, 1, 1, 0), &r2).unwrap(), val("1+sqrt(2)"));
        // (0, 1, 0, 2) is √2/(2√2) = 1/2; the scaling x/2 is (0, 1, 2, 0).
        assert_eq!(
            mobius_apply(&MobiusWitness::from_i64(0, 1, 0, 2), &r2).unwrap(),
            QuadValue::Rational(rat(1, 2))
        );
        let half = mobius_apply(&MobiusWitness::from_i64(0, 1, 2, 0), &r2).unwrap();
        let half = half.as_irrational().unwrap();
        assert_eq!(half.p(), &rat(0, 1));
        assert_eq!(half.q(), &rat(1, 2));
        assert_eq!(
            mobius_apply(&MobiusWitness::from_i64(1, 1, 0, 0), &r2),
            Err(QuadError::ZeroDenominator)
        );
        // Singular matrices collapse to a rational.
        assert!(mobius_apply(&MobiusWitness::from_i64(1, 2, 2, 4), &r2).unwrap().is_rational());
    }

    #[test]
    fn same_field_examples() {
        assert!(same_field(&irr("sqrt(2)"), &irr("1+sqrt(2)")));
        assert!(!same_field(&irr("sqrt(2)"), &irr("sqrt(3)")));
        assert!(same_field(&irr("(1+sqrt(5))/2"), &irr("sqrt(5)")));
    }

    #[test]
    fn affine_witness_examples() {
        let w = mobius_witness(&irr("1+sqrt(2)"), &irr("sqrt(2)")).unwrap();
        assert_eq!(w, MobiusWitness::from_i64(1, 1, 1, 0));
        assert_eq!(w.det(), &BigInt::from(-1));
        assert_eq!(mobius_apply(&w, &irr("sqrt(2)")).unwrap(), val("1+sqrt(2)"));
        assert_eq!(mobius_witness(&irr("sqrt(3)"), &irr("sqrt(2)")), None);
        assert_eq!(mobius_witness(&irr("sqrt(2)"), &irr("sqrt(2)")), Some(MobiusWitness::identity()));

        let x = irr("(3-2*sqrt(7))/5");
        let y = irr("(1+sqrt(7))/3");
        let w = mobius_witness(&x, &y).unwrap();
        assert!(w.c().is_positive());
        assert!(w.d().is_zero());
        assert_eq!(mobius_apply(&w, &y).unwrap(), QuadValue::Irrational(x));
        assert_eq!(w.affine_slope(), Some(rat(-6, 5)));
    }

    #[test]
    fn unimodular_examples() {
        let w = gl2z_equivalent(&irr("sqrt(2)"), &irr("1+sqrt(2)")).unwrap();
        assert!(w.is_unimodular());
        assert_eq!(mobius_apply(&w, &irr("1+sqrt(2)")).unwrap(), val("sqrt(2)"));
        assert_eq!(gl2z_equivalent(&irr("sqrt(2)"), &irr("sqrt(3)")), None);
        let g = irr("(1+sqrt(5))/2");
        assert_eq!(gl2z_equivalent(&g, &g), Some(MobiusWitness::identity()));
        // Same field, different discriminants.
        assert_eq!(gl2z_equivalent(&g, &irr("sqrt(5)")), None);
        assert_eq!(gl2z_equivalent(&irr("sqrt(2)"), &irr("2*sqrt(2)")), None);
    }

    #[test]
    fn unimodular_with_long_prefixes() {
        let x = irr("(17+sqrt(19))/11");
        let w0 = MobiusWitness::from_i64(3, -7, 2, -5);
        let y = mobius_apply(&w0, &x).unwrap();
        let y = y.as_irrational().unwrap();
        let w = gl2z_equivalent(y, &x).unwrap();
        assert!(w.is_unimodular());
        assert_eq!(mobius_apply(&w, &x).unwrap(), QuadValue::Irrational(y.clone()));
        assert!(w.c().is_positive() || (w.c().is_zero() && w.d().is_positive()));
    }
}
