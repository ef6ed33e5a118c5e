//! Irrational tori `T_α = ℝ/(ℤ + αℤ)` with quadratic-irrational slope.
//!
//! All tangent data is computed at the class of 0. Nothing depends on the
//! basepoint: translations of `T_β` move any image point back to 0.
//!
//! A smooth map `T_α → T_β` lifts to an affine map `F(t) = at + b` of `ℝ`,
//! and a nonconstant one exists exactly when `α = (a + bβ)/(c + dβ)` for
//! integers `a, b, c, d`. The pushforward of the generator `[π_α, ∂/∂t]` is
//! `a·[π_β, ∂/∂t]`, so the `(T_β, 0)`-internal tangent space of `T_α` is `ℝ`
//! or `0` according to whether such a map exists.

use alloc::string::ToString;
use alloc::vec;

use thiserror::Error;

use crate::functor::{FunctorKind, Space, Status, TangentReport, Witness};
use crate::quad::{gl2z_equivalent, mobius_witness, MobiusWitness, QuadValue, QuadraticIrrational, Rational};

/// Label of the generator of the internal tangent space.
pub const TORUS_GENERATOR: &str = "[π_α, ∂/∂t]";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("torus slope must be irrational")]
    RationalSlope,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IrrationalTorus {
    slope: QuadraticIrrational,
}

impl IrrationalTorus {
    pub fn new(slope: QuadraticIrrational) -> Self {
        IrrationalTorus { slope }
    }

    pub fn from_value(slope: QuadValue) -> Result<Self, TorusError> {
        match slope {
            QuadValue::Irrational(s) => Ok(Self::new(s)),
            QuadValue::Rational(_) => Err(TorusError::RationalSlope),
        }
    }

    pub fn slope(&self) -> &QuadraticIrrational {
        &self.slope
    }
}

/// Whether a nonconstant smooth map `source → target` exists, with its lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusHomReport {
    pub nonconstant_exists: bool,
    pub witness: Option<MobiusWitness>,
    /// `a` in `T(f)[π_α, ∂/∂t] = a·[π_β, ∂/∂t]`, the slope of the affine lift.
    pub basis_action: Option<Rational>,
}

pub fn hom_nonconstant(source: &IrrationalTorus, target: &IrrationalTorus) -> TorusHomReport {
    let witness = mobius_witness(&source.slope, &target.slope);
    let basis_action = witness.as_ref().and_then(MobiusWitness::affine_slope);
    TorusHomReport {
        nonconstant_exists: witness.is_some(),
        witness,
        basis_action,
    }
}

/// `(T_test, 0)`-internal tangent space of `space`.
pub fn y_internal_dim(space: &IrrationalTorus, test: &IrrationalTorus) -> TangentReport {
    let functor = FunctorKind::y_internal(Space::Torus(test.clone()));
    let hom = hom_nonconstant(space, test);
    match hom.witness {
        Some(w) => TangentReport::spanned(
            Space::Torus(space.clone()),
            functor,
            vec![TORUS_GENERATOR.to_string()],
            Status::Computed,
            "a nonconstant smooth map exists (slopes related by an integer Möbius \
             transformation); its affine lift sends [π_α, ∂/∂t] to a nonzero multiple of \
             [π_β, ∂/∂t]",
        )
        .with_witness(Witness::Mobius(w)),
        None => TangentReport::zero(
            Space::Torus(space.clone()),
            functor,
            Status::Computed,
            "all germs constant; D-topology indiscrete",
        ),
    }
}

/// Internal, Vincent-type and right tangent spaces of one space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalDims {
    pub internal: TangentReport,
    pub vincent: TangentReport,
    pub right: TangentReport,
}

/// `(1, 0, 0)` for every slope.
pub fn classical_dims(space: &IrrationalTorus) -> ClassicalDims {
    let s = Space::Torus(space.clone());
    ClassicalDims {
        internal: TangentReport::spanned(
            s.clone(),
            FunctorKind::Internal,
            vec![TORUS_GENERATOR.to_string()],
            Status::RegisteredByTheorem,
            "the internal tangent space of an irrational torus is ℝ, generated by the class of \
             the quotient map",
        ),
        vincent: TangentReport::zero(
            s.clone(),
            FunctorKind::Vincent,
            Status::RegisteredByTheorem,
            "the Vincent-type tangent space is a subspace of the right tangent space, which is 0",
        ),
        right: TangentReport::zero(
            s,
            FunctorKind::Right,
            Status::RegisteredByTheorem,
            "smooth functions on T_α are constant, so every derivation of the germ algebra vanishes",
        ),
    }
}

/// Diffeomorphism witness (`ad − bc = ±1`), if the tori are diffeomorphic.
pub fn diffeomorphic(a: &IrrationalTorus, b: &IrrationalTorus) -> Option<MobiusWitness> {
    gl2z_equivalent(&a.slope, &b.slope)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::Dimension;
    use crate::quad::{mobius_apply, parse_quadratic, rat};

    fn t(s: &str) -> IrrationalTorus {
        IrrationalTorus::from_value(parse_quadratic(s).unwrap()).unwrap()
    }

    #[test]
    fn rational_slope_rejected() {
        assert_eq!(
            IrrationalTorus::from_value(parse_quadratic("sqrt(4)").unwrap()),
            Err(TorusError::RationalSlope)
        );
    }

    #[test]
    fn hom_examples() {
        let h = hom_nonconstant(&t("1+sqrt(2)"), &t("sqrt(2)"));
        assert!(h.nonconstant_exists);
        assert_eq!(h.witness, Some(MobiusWitness::from_i64(1, 1, 1, 0)));
        assert_eq!(h.basis_action, Some(rat(1, 1)));
        let h = hom_nonconstant(&t("sqrt(3)"), &t("sqrt(2)"));
        assert!(!h.nonconstant_exists);
        assert_eq!(h.basis_action, None);
        let g = t("(1+sqrt(5))/2");
        assert_eq!(hom_nonconstant(&g, &g).basis_action, Some(rat(1, 1)));
    }

    #[test]
    fn y_internal_examples() {
        let r = y_internal_dim(&t("1+sqrt(2)"), &t("sqrt(2)"));
        assert_eq!(r.dimension, Dimension::Determined(1));
        assert_eq!(r.generators, vec![TORUS_GENERATOR.to_string()]);
        assert_eq!(r.status, Status::Computed);
        let r = y_internal_dim(&t("sqrt(3)"), &t("sqrt(2)"));
        assert_eq!(r.dimension, Dimension::Determined(0));
        assert_eq!(r.justification, "all germs constant; D-topology indiscrete");
        let a = t("sqrt(7)");
        assert_eq!(y_internal_dim(&a, &a).dimension, Dimension::Determined(1));
    }

    #[test]
    fn classical_examples() {
        for s in ["sqrt(2)", "(1+sqrt(5))/2", "sqrt(3)"] {
            let d = classical_dims(&t(s));
            assert_eq!(d.internal.dimension, Dimension::Determined(1));
            assert_eq!(d.vincent.dimension, Dimension::Determined(0));
            assert_eq!(d.right.dimension, Dimension::Determined(0));
            assert_eq!(d.internal.status, Status::RegisteredByTheorem);
        }
    }

    #[test]
    fn diffeomorphic_examples() {
        let w = diffeomorphic(&t("sqrt(2)"), &t("1+sqrt(2)")).unwrap();
        assert!(w.is_unimodular());
        assert_eq!(
            mobius_apply(&w, t("1+sqrt(2)").slope()).unwrap(),
            parse_quadratic("sqrt(2)").unwrap()
        );
        assert_eq!(diffeomorphic(&t("sqrt(2)"), &t("sqrt(3)")), None);
        let a = t("sqrt(5)");
        assert_eq!(diffeomorphic(&a, &a), Some(MobiusWitness::identity()));
    }

    #[test]
    fn basis_action_composes() {
        let (a, b, c) = (t("(3-2*sqrt(7))/5"), t("1+sqrt(7)"), t("(2+3*sqrt(7))/4"));
        let ab = hom_nonconstant(&a, &b).basis_action.unwrap();
        let bc = hom_nonconstant(&b, &c).basis_action.unwrap();
        let ac = hom_nonconstant(&a, &c).basis_action.unwrap();
        assert_eq!(ab * bc, ac);
    }
}
