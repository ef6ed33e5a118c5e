//! Orbit spaces `H_n = ℝⁿ/O(n)` based at the class of the origin.
//!
//! A smooth germ on `H_n` is an `O(n)`-invariant germ on `ℝⁿ`, i.e. a germ
//! `Ψ(‖x‖²)`. The right tangent space of `H_n` is one-dimensional with
//! generator
//!
//! ```text
//! D_n(f) = ½ ∂²f̃/∂x₁²(0)
//! ```
//!
//! and for `f̃ = Ψ(‖x‖²)` the chain rule gives `∂²f̃/∂x₁²(0) = 2Ψ'(0)`, so
//! `D_n` acts on invariant germs as `Ψ ↦ Ψ'(0)`.
//!
//! Maps `H_m → H_n` are represented by polynomial lifts `F: ℝᵐ → ℝⁿ` with
//! `F(0) = 0`; such a lift descends exactly when `‖F(x)‖² = Ψ_F(‖x‖²)` for
//! some polynomial `Ψ_F`. Only the 1-jet of `F` and `Ψ_F` enter the
//! pushforward, so polynomial germs of bounded degree are enough here. The
//! local-lift subtlety of the quotient diffeology is replaced by global
//! polynomial lifts.

mod random;

pub use random::random_valid_lift;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::functor::{FunctorKind, Space, Status, TangentReport, Witness};
use crate::poly::{Exponents, MultiPoly, UniPoly};
use crate::quad::Rational;

/// Default bound on `deg Ψ` for invariant germs.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// Label of the generator of the right tangent space of `H_n`.
pub const ORBIT_GENERATOR: &str = "D_n";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("orbit space dimension must be at least 1")]
    ZeroDimension,
    #[error("invariant germ degree {degree} exceeds bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("lift component {0} has a nonzero constant term")]
    NotBased(usize),
    #[error("lift component {index} lives in {found} variables, expected {expected}")]
    VariableCount {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("a lift needs at least one source and one target dimension")]
    EmptyLift,
    #[error("lifts are not composable: inner target {inner} ≠ outer source {outer}")]
    NotComposable { inner: usize, outer: usize },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

/// Why a polynomial map does not descend to the orbit spaces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("‖F‖² restricted to the x1-axis has an odd term {}", crate::poly::monomial_label(.monomial))]
    OddAxisRestriction { monomial: Exponents },
    #[error("‖F(x)‖² is not a function of ‖x‖²: coefficient of {} differs", crate::poly::monomial_label(.monomial))]
    NotRadial { monomial: Exponents },
    #[error(transparent)]
    Orbit(#[from] OrbitError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitSpace {
    n: u32,
}

impl OrbitSpace {
    pub fn new(n: u32) -> Result<Self, OrbitError> {
        if n == 0 {
            return Err(OrbitError::ZeroDimension);
        }
        Ok(OrbitSpace { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// The germ `[x] ↦ Ψ(‖x‖²)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantGerm {
    psi: UniPoly,
}

impl InvariantGerm {
    pub fn new(psi: UniPoly) -> Result<Self, OrbitError> {
        Self::with_bound(psi, DEFAULT_DEGREE_BOUND)
    }

    pub fn with_bound(psi: UniPoly, bound: usize) -> Result<Self, OrbitError> {
        match psi.degree() {
            Some(degree) if degree > bound => Err(OrbitError::DegreeBound { degree, bound }),
            _ => Ok(InvariantGerm { psi }),
        }
    }

    /// `q_n: [x] ↦ ‖x‖²`, i.e. `Ψ(t) = t`.
    pub fn squared_norm() -> Self {
        InvariantGerm {
            psi: UniPoly::identity(),
        }
    }

    pub fn psi(&self) -> &UniPoly {
        &self.psi
    }

    /// The invariant representative `f̃(x) = Ψ(‖x‖²)` on `ℝⁿ`.
    pub fn representative(&self, n: usize) -> MultiPoly {
        self.psi.of_norm_squared(n)
    }

    /// Pullback along a map whose lift has squared norm `Ψ_F(‖x‖²)`:
    /// `g ∘ f` has germ `Ψ_g(Ψ_F(t))`. No degree bound on the result.
    pub fn pull_back(&self, along: &InvariantGerm) -> InvariantGerm {
        InvariantGerm {
            psi: self.psi.compose(&along.psi),
        }
    }
}

/// Polynomial map `F: ℝᵐ → ℝⁿ` with `F(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyLift {
    m: usize,
    components: Vec<MultiPoly>,
}

impl PolyLift {
    pub fn new(m: usize, components: Vec<MultiPoly>) -> Result<Self, OrbitError> {
        if m == 0 || components.is_empty() {
            return Err(OrbitError::EmptyLift);
        }
        for (i, c) in components.iter().enumerate() {
            if c.nvars() != m {
                return Err(OrbitError::VariableCount {
                    index: i,
                    found: c.nvars(),
                    expected: m,
                });
            }
            if !c.constant_term().is_zero() {
                return Err(OrbitError::NotBased(i));
            }
        }
        Ok(PolyLift { m, components })
    }

    /// `ι(x) = (x, 0)`, the isometric embedding `ℝᵐ → ℝⁿ` for `m ≤ n`.
    pub fn standard_embedding(m: usize, n: usize) -> Result<Self, OrbitError> {
        if m == 0 || m > n {
            return Err(OrbitError::Precondition("standard embedding needs 1 ≤ m ≤ n"));
        }
        let components = (0..n)
            .map(|i| if i < m { MultiPoly::var(m, i) } else { MultiPoly::zero(m) })
            .collect();
        PolyLift::new(m, components)
    }

    pub fn source_dim(&self) -> usize {
        self.m
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyLift) -> Result<PolyLift, OrbitError> {
        if inner.target_dim() != self.m {
            return Err(OrbitError::NotComposable {
                inner: inner.target_dim(),
                outer: self.m,
            });
        }
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(&inner.components))
            .collect();
        PolyLift::new(inner.m, components)
    }

    /// `‖F(x)‖²`.
    pub fn squared_norm(&self) -> MultiPoly {
        self.components
            .iter()
            .fold(MultiPoly::zero(self.m), |acc, c| acc.add(&c.mul(c)))
    }

    /// Linear part `A` as an `n × m` matrix.
    pub fn linear_part(&self) -> Vec<Vec<Rational>> {
        self.components.iter().map(MultiPoly::linear_part).collect()
    }
}

/// `(x1; x2; 0)`
impl fmt::Display for PolyLift {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str(")")
    }
}

/// `coeff · D_n` in the one-dimensional right tangent space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub coeff: Rational,
}

impl Derivation {
    pub fn new(coeff: Rational) -> Self {
        Derivation { coeff }
    }

    /// `D_n` itself.
    pub fn generator() -> Self {
        Derivation::new(Rational::one())
    }
}

/// A lift together with its descended germ and the pushforward of `D_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftWitness {
    pub lift: PolyLift,
    pub psi: UniPoly,
    pub pushforward: Rational,
}

/// Checks that `F` descends to `H_m → H_n` and returns `Ψ_F` with
/// `‖F(x)‖² = Ψ_F(‖x‖²)`.
pub fn validate_lift(lift: &PolyLift) -> Result<InvariantGerm, LiftError> {
    validate_lift_with_bound(lift, DEFAULT_DEGREE_BOUND)
}

pub fn validate_lift_with_bound(lift: &PolyLift, bound: usize) -> Result<InvariantGerm, LiftError> {
    let norm = lift.squared_norm();
    let axis = norm.restrict_to_first_axis();
    let mut psi = Vec::new();
    for (k, c) in axis.coeffs().iter().enumerate() {
        if k % 2 == 1 {
            if !c.is_zero() {
                let mut e = vec![0; lift.m];
                e[0] = k as u32;
                return Err(LiftError::OddAxisRestriction { monomial: e });
            }
        } else {
            psi.push(c.clone());
        }
    }
    let psi = UniPoly::new(psi);
    let diff = norm.sub(&psi.of_norm_squared(lift.m));
    if let Some((e, _)) = diff.terms().next() {
        return Err(LiftError::NotRadial { monomial: e.clone() });
    }
    Ok(InvariantGerm::with_bound(psi, bound)?)
}

/// `coeff · Ψ'(0)`.
pub fn derivation_value(d: &Derivation, germ: &InvariantGerm) -> Rational {
    &d.coeff * germ.psi().coeff(1)
}

/// `½ ∂²f̃/∂x₁²(0)` evaluated directly on a representative.
pub fn half_second_partial_at_origin(f: &MultiPoly) -> Rational {
    f.derivative(0).derivative(0).constant_term() / Rational::from_integer(2.into())
}

/// Pushforward along the map lifted by `F`. The target's right tangent space
/// is spanned by `D_n`, and `D_n(q_n) = 1`, so the image is determined by its
/// value `D(q_n ∘ f) = coeff · Ψ_F'(0)` on `q_n`.
pub fn pushforward(lift: &PolyLift, d: &Derivation) -> Result<Derivation, LiftError> {
    let germ = validate_lift(lift)?;
    Ok(Derivation::new(derivation_value(d, &germ)))
}

/// Linear part `A` of a valid lift, its Gram matrix `ᵗA·A`, and the scalar
/// `a` with `ᵗA·A = a·I_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankObstruction {
    pub m: usize,
    pub n: usize,
    pub linear_part: Vec<Vec<Rational>>,
    pub gram: Vec<Vec<Rational>>,
    pub scalar: Option<Rational>,
}

impl RankObstruction {
    /// A valid lift always has a scalar Gram matrix, and since
    /// `rank(ᵗA·A) ≤ n`, the scalar vanishes when `m > n`.
    pub fn theorem_holds(&self) -> bool {
        match &self.scalar {
            Some(a) => self.m <= self.n || a.is_zero(),
            None => false,
        }
    }
}

pub fn rank_obstruction(lift: &PolyLift) -> Result<RankObstruction, LiftError> {
    validate_lift(lift)?;
    let a = lift.linear_part();
    let m = lift.source_dim();
    let gram: Vec<Vec<Rational>> = (0..m)
        .map(|j| {
            (0..m)
                .map(|k| a.iter().map(|row| &row[j] * &row[k]).sum())
                .collect()
        })
        .collect();
    let diagonal = gram[0][0].clone();
    let is_scalar = (0..m).all(|j| {
        (0..m).all(|k| {
            if j == k {
                gram[j][k] == diagonal
            } else {
                gram[j][k].is_zero()
            }
        })
    });
    Ok(RankObstruction {
        m,
        n: lift.target_dim(),
        linear_part: a,
        scalar: is_scalar.then_some(diagonal),
        gram,
    })
}

/// `(H_m, 0)`-right tangent space of `H_n`: `ℝ` when `m ≤ n`, `0` otherwise.
pub fn theorem2_dim(m: u32, n: u32) -> Result<TangentReport, OrbitError> {
    let test = OrbitSpace::new(m)?;
    let target = OrbitSpace::new(n)?;
    let space = Space::Orbit(target);
    let functor = FunctorKind::y_right(Space::Orbit(test));
    if m <= n {
        let lift = PolyLift::standard_embedding(m as usize, n as usize)?;
        let germ = validate_lift(&lift).map_err(|_| OrbitError::Precondition("embedding descends"))?;
        let image = derivation_value(&Derivation::generator(), &germ);
        let report = TangentReport::spanned(
            space,
            functor,
            vec![format!("T(ι)D_{}", m)],
            Status::Computed,
            "the isometric embedding ι(x) = (x, 0) satisfies q_n ∘ ι = q_m, so the pushforward \
             of D_m takes the value D_m(q_m) = 1 on q_n",
        );
        Ok(report.with_witness(Witness::Lift(LiftWitness {
            lift,
            psi: germ.psi().clone(),
            pushforward: image,
        })))
    } else {
        Ok(TangentReport::zero(
            space,
            functor,
            Status::RegisteredByTheorem,
            "for any lift F with ‖F(x)‖² = Ψ(‖x‖²), comparing quadratic terms gives ᵗA·A = Ψ'(0)·I_m; \
             rank(ᵗA·A) ≤ n < m forces Ψ'(0) = 0, so every pushforward of D_m vanishes on q_n",
        ))
    }
}

/// `(0, 0, 1)` for every `n`, in the order internal, Vincent, right.
pub fn classical_dims(space: &OrbitSpace) -> crate::torus::ClassicalDims {
    let s = Space::Orbit(*space);
    crate::torus::ClassicalDims {
        internal: TangentReport::zero(
            s.clone(),
            FunctorKind::Internal,
            Status::RegisteredByTheorem,
            "the internal tangent space of H_n at 0 vanishes",
        ),
        vincent: TangentReport::zero(
            s.clone(),
            FunctorKind::Vincent,
            Status::RegisteredByTheorem,
            "the Vincent-type tangent space is the image of the internal one, which is 0",
        ),
        right: TangentReport::spanned(
            s,
            FunctorKind::Right,
            vec![ORBIT_GENERATOR.to_string()],
            Status::RegisteredByTheorem,
            "the right tangent space of H_n at 0 is one-dimensional, generated by \
             D_n(f) = ½ ∂²f̃/∂x₁²(0)",
        ),
    }
}

/// Human-readable summary of a lift witness.
pub fn describe_lift(w: &LiftWitness) -> String {
    format!("lift {} with Ψ(t) = {}, pushforward value {}", w.lift, w.psi, w.pushforward)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::Dimension;
    use crate::quad::rat;

    fn x(m: usize, i: usize) -> MultiPoly {
        MultiPoly::var(m, i)
    }

    fn lift(m: usize, comps: Vec<MultiPoly>) -> PolyLift {
        PolyLift::new(m, comps).unwrap()
    }

    #[test]
    fn validate_examples() {
        let f = lift(1, vec![x(1, 0), MultiPoly::zero(1)]);
        assert_eq!(validate_lift(&f).unwrap().psi(), &UniPoly::identity());

        let f = lift(2, vec![MultiPoly::norm_squared(2), MultiPoly::zero(2)]);
        assert_eq!(validate_lift(&f).unwrap().psi(), &UniPoly::from_i64(&[0, 0, 1]));

        let f = lift(2, vec![x(2, 0)]);
        assert_eq!(
            validate_lift(&f),
            Err(LiftError::NotRadial { monomial: vec![0, 2] })
        );
    }

    #[test]
    fn odd_axis_restriction_detected() {
        // ‖(x1 + x1², x2)‖² has an x1³ term on the axis.
        let f = lift(2, vec![x(2, 0).add(&x(2, 0).mul(&x(2, 0))), x(2, 1)]);
        assert_eq!(
            validate_lift(&f),
            Err(LiftError::OddAxisRestriction { monomial: vec![3, 0] })
        );
    }

    #[test]
    fn lift_construction_errors() {
        assert_eq!(
            PolyLift::new(2, vec![MultiPoly::constant(2, rat(1, 1))]),
            Err(OrbitError::NotBased(0))
        );
        assert!(matches!(
            PolyLift::new(2, vec![x(3, 0)]),
            Err(OrbitError::VariableCount { .. })
        ));
        assert_eq!(PolyLift::new(1, vec![]), Err(OrbitError::EmptyLift));
        assert!(PolyLift::standard_embedding(3, 2).is_err());
    }

    #[test]
    fn degree_bound() {
        // ‖x‖⁸ squared gives Ψ = t⁸, within the default bound; ‖x‖¹⁰ does not fit.
        let f = lift(1, vec![x(1, 0).pow(4)]);
        assert!(validate_lift(&f).is_ok());
        let f = lift(1, vec![x(1, 0).pow(9)]);
        assert!(matches!(
            validate_lift(&f),
            Err(LiftError::Orbit(OrbitError::DegreeBound { degree: 9, bound: 8 }))
        ));
        assert!(validate_lift_with_bound(&f, 9).is_ok());
    }

    #[test]
    fn derivation_examples() {
        let q = InvariantGerm::squared_norm();
        assert_eq!(derivation_value(&Derivation::generator(), &q), rat(1, 1));
        let sq = InvariantGerm::new(UniPoly::from_i64(&[0, 0, 1])).unwrap();
        assert_eq!(derivation_value(&Derivation::generator(), &sq), rat(0, 1));
        let g = InvariantGerm::new(UniPoly::from_i64(&[0, 5, 0, 7])).unwrap();
        assert_eq!(derivation_value(&Derivation::new(rat(3, 2)), &g), rat(15, 2));
    }

    #[test]
    fn definitional_formula_agrees() {
        let g = InvariantGerm::new(UniPoly::from_i64(&[3, -4, 2, 1])).unwrap();
        for n in 1..=3 {
            assert_eq!(
                half_second_partial_at_origin(&g.representative(n)),
                derivation_value(&Derivation::generator(), &g)
            );
        }
    }

    #[test]
    fn pushforward_examples() {
        let emb = PolyLift::standard_embedding(1, 2).unwrap();
        assert_eq!(pushforward(&emb, &Derivation::generator()).unwrap(), Derivation::generator());
        let f = lift(2, vec![MultiPoly::norm_squared(2), MultiPoly::zero(2)]);
        assert_eq!(pushforward(&f, &Derivation::generator()).unwrap().coeff, rat(0, 1));
        assert_eq!(pushforward(&emb, &Derivation::new(rat(0, 1))).unwrap().coeff, rat(0, 1));
        assert!(pushforward(&lift(2, vec![x(2, 0)]), &Derivation::generator()).is_err());
    }

    #[test]
    fn rank_obstruction_examples() {
        let emb = PolyLift::standard_embedding(1, 2).unwrap();
        let r = rank_obstruction(&emb).unwrap();
        assert_eq!(r.linear_part, vec![vec![rat(1, 1)], vec![rat(0, 1)]]);
        assert_eq!(r.gram, vec![vec![rat(1, 1)]]);
        assert_eq!(r.scalar, Some(rat(1, 1)));
        assert!(r.theorem_holds());

        let f = lift(2, vec![MultiPoly::norm_squared(2), MultiPoly::zero(2)]);
        let r = rank_obstruction(&f).unwrap();
        assert_eq!(r.scalar, Some(rat(0, 1)));

        // A rotation by a Pythagorean angle is a valid lift with a = 1.
        let rot = lift(
            2,
            vec![
                x(2, 0).scale(&rat(3, 5)).sub(&x(2, 1).scale(&rat(4, 5))),
                x(2, 0).scale(&rat(4, 5)).add(&x(2, 1).scale(&rat(3, 5))),
            ],
        );
        assert_eq!(rank_obstruction(&rot).unwrap().scalar, Some(rat(1, 1)));
    }

    #[test]
    fn orbit_dim_examples() {
        let r = theorem2_dim(1, 2).unwrap();
        assert_eq!(r.dimension, Dimension::Determined(1));
        match &r.witness {
            Some(Witness::Lift(w)) => {
                assert_eq!(w.pushforward, rat(1, 1));
                assert_eq!(w.lift.to_string(), "(x1; 0)");
            }
            other => panic!("unexpected witness {:?}", other),
        }
        assert_eq!(theorem2_dim(3, 2).unwrap().dimension, Dimension::Determined(0));
        assert_eq!(theorem2_dim(3, 2).unwrap().status, Status::RegisteredByTheorem);
        assert_eq!(theorem2_dim(2, 2).unwrap().dimension, Dimension::Determined(1));
        assert_eq!(theorem2_dim(0, 2), Err(OrbitError::ZeroDimension));
    }

    #[test]
    fn classical_examples() {
        for n in [1, 2, 5] {
            let d = classical_dims(&OrbitSpace::new(n).unwrap());
            assert_eq!(d.internal.dimension, Dimension::Determined(0));
            assert_eq!(d.vincent.dimension, Dimension::Determined(0));
            assert_eq!(d.right.dimension, Dimension::Determined(1));
            assert_eq!(d.right.generators, vec!["D_n".to_string()]);
        }
    }

    #[test]
    fn composition_multiplies_linear_coefficients() {
        let sq = lift(
            2,
            vec![
                x(2, 0).mul(&x(2, 0)).sub(&x(2, 1).mul(&x(2, 1))),
                x(2, 0).mul(&x(2, 1)).scale(&rat(2, 1)),
            ],
        );
        let emb = PolyLift::standard_embedding(2, 3).unwrap();
        let both = emb.compose(&sq).unwrap();
        let d = Derivation::generator();
        let direct = pushforward(&both, &d).unwrap();
        let stepwise = pushforward(&emb, &pushforward(&sq, &d).unwrap()).unwrap();
        assert_eq!(direct, stepwise);
        assert!(emb.compose(&emb).is_err());
    }
}
