//! Catalog of based spaces and the five tangent constructions on it.
//!
//! Every space is based at the origin (or the class of the origin). The
//! general plot category and the full Kan-extension formulas are never
//! materialized: each catalog space carries a finite presentation of its
//! tangent data, and the test-space constructions are evaluated from the
//! classified hom-sets where those are known.

mod axioms;

pub use axioms::{functor_axiom_check, AxiomCheck, AxiomError, AxiomReport};

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::orbit::{self, LiftWitness, OrbitSpace};
use crate::quad::{parse_quadratic, MobiusWitness, QuadraticIrrational};
use crate::torus::{self, IrrationalTorus};

/// A based space from the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    /// `ℝᵏ` at the origin.
    Euclidean(u32),
    /// `T_α = ℝ/(ℤ + αℤ)` at the class of 0.
    Torus(IrrationalTorus),
    /// `H_n = ℝⁿ/O(n)` at the class of 0.
    Orbit(OrbitSpace),
}

impl Space {
    pub fn torus(slope: QuadraticIrrational) -> Space {
        Space::Torus(IrrationalTorus::new(slope))
    }

    /// Panics when `n = 0`; use [`OrbitSpace::new`] for checked construction.
    pub fn orbit(n: u32) -> Space {
        Space::Orbit(OrbitSpace::new(n).expect("orbit space dimension must be ≥ 1"))
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Euclidean(k) => write!(f, "R^{}", k),
            Space::Torus(t) => write!(f, "torus:{}", t.slope()),
            Space::Orbit(h) => write!(f, "orbit:{}", h.n()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FunctorKind {
    Internal,
    Right,
    Vincent,
    /// Internal classes identified when no germ into the test space separates them.
    YInternal(Box<Space>),
    /// Span of pushforwards of right tangent vectors of the test space.
    YRight(Box<Space>),
}

impl FunctorKind {
    pub fn y_internal(test: Space) -> Self {
        FunctorKind::YInternal(Box::new(test))
    }

    pub fn y_right(test: Space) -> Self {
        FunctorKind::YRight(Box::new(test))
    }

    pub fn name(&self) -> &'static str {
        match self {
            FunctorKind::Internal => "internal",
            FunctorKind::Right => "right",
            FunctorKind::Vincent => "vincent",
            FunctorKind::YInternal(_) => "y-internal",
            FunctorKind::YRight(_) => "y-right",
        }
    }

    pub fn test_space(&self) -> Option<&Space> {
        match self {
            FunctorKind::YInternal(y) | FunctorKind::YRight(y) => Some(y),
            _ => None,
        }
    }
}

impl fmt::Display for FunctorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.test_space() {
            Some(y) => write!(f, "{}({})", self.name(), y),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dimension {
    Determined(usize),
    Undetermined,
}

impl Dimension {
    pub fn value(self) -> Option<usize> {
        match self {
            Dimension::Determined(d) => Some(d),
            Dimension::Undetermined => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Determined(d) => write!(f, "{}", d),
            Dimension::Undetermined => f.write_str("undetermined"),
        }
    }
}

/// Provenance of a reported dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// A witness or annihilation argument was evaluated by this crate.
    Computed,
    /// Fixed by a known theorem; not re-derived here.
    RegisteredByTheorem,
    /// The hom-sets involved are not classified.
    UndeterminedByPaper,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Computed => "computed",
            Status::RegisteredByTheorem => "registered-by-theorem",
            Status::UndeterminedByPaper => "undetermined-by-paper",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Mobius(MobiusWitness),
    Lift(LiftWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub space: Space,
    pub functor: FunctorKind,
    pub dimension: Dimension,
    pub generators: Vec<String>,
    pub witness: Option<Witness>,
    pub status: Status,
    pub justification: String,
}

impl TangentReport {
    /// Zero-dimensional report.
    pub(crate) fn zero(space: Space, functor: FunctorKind, status: Status, why: &str) -> Self {
        TangentReport {
            space,
            functor,
            dimension: Dimension::Determined(0),
            generators: Vec::new(),
            witness: None,
            status,
            justification: why.to_string(),
        }
    }

    pub(crate) fn spanned(
        space: Space,
        functor: FunctorKind,
        generators: Vec<String>,
        status: Status,
        why: &str,
    ) -> Self {
        TangentReport {
            space,
            functor,
            dimension: Dimension::Determined(generators.len()),
            generators,
            witness: None,
            status,
            justification: why.to_string(),
        }
    }

    fn undetermined(space: Space, functor: FunctorKind, why: &str) -> Self {
        TangentReport {
            space,
            functor,
            dimension: Dimension::Undetermined,
            generators: Vec::new(),
            witness: None,
            status: Status::UndeterminedByPaper,
            justification: why.to_string(),
        }
    }

    pub(crate) fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    /// `dimension = #generators` when determined; undetermined only with that status.
    pub fn is_consistent(&self) -> bool {
        match self.dimension {
            Dimension::Determined(d) => {
                d == self.generators.len() && self.status != Status::UndeterminedByPaper
            }
            Dimension::Undetermined => self.status == Status::UndeterminedByPaper,
        }
    }
}

fn euclidean_generators(k: u32) -> Vec<String> {
    (1..=k).map(|i| format!("∂/∂x{}", i)).collect()
}

/// Dimension of one of the three classical constructions.
fn classical_dim(space: &Space, functor: &FunctorKind) -> usize {
    match tangent(space, functor).dimension {
        Dimension::Determined(d) => d,
        Dimension::Undetermined => unreachable!("classical constructions are always determined"),
    }
}

/// Tangent space of `space` under `functor`.
pub fn tangent(space: &Space, functor: &FunctorKind) -> TangentReport {
    match functor {
        FunctorKind::Internal | FunctorKind::Right | FunctorKind::Vincent => {
            classical(space, functor)
        }
        FunctorKind::YInternal(test) => y_internal(space, test),
        FunctorKind::YRight(test) => y_right(space, test),
    }
}

fn classical(space: &Space, functor: &FunctorKind) -> TangentReport {
    match space {
        Space::Euclidean(k) => TangentReport::spanned(
            space.clone(),
            functor.clone(),
            euclidean_generators(*k),
            Status::RegisteredByTheorem,
            "on manifolds the internal, Vincent-type and right tangent spaces all agree with \
             the classical tangent space, since the inclusion of Euclidean opens is fully faithful",
        ),
        Space::Torus(t) => {
            let dims = torus::classical_dims(t);
            match functor {
                FunctorKind::Internal => dims.internal,
                FunctorKind::Vincent => dims.vincent,
                _ => dims.right,
            }
        }
        Space::Orbit(h) => {
            let dims = orbit::classical_dims(h);
            match functor {
                FunctorKind::Internal => dims.internal,
                FunctorKind::Vincent => dims.vincent,
                _ => dims.right,
            }
        }
    }
}

fn y_internal(space: &Space, test: &Space) -> TangentReport {
    let functor = FunctorKind::y_internal(test.clone());
    let zero = |status, why: &str| TangentReport::zero(space.clone(), functor.clone(), status, why);
    if classical_dim(space, &FunctorKind::Internal) == 0 {
        return zero(
            Status::Computed,
            "the canonical map from the internal tangent space onto the (Y,y)-internal one is \
             surjective, and the internal tangent space is 0",
        );
    }
    if classical_dim(test, &FunctorKind::Internal) == 0 {
        return zero(
            Status::Computed,
            "the internal tangent space of the test space is 0, so every pair of classes has \
             equal image under every germ and the relation identifies everything",
        );
    }
    match (space, test) {
        (Space::Euclidean(k), _) => TangentReport::spanned(
            space.clone(),
            functor,
            euclidean_generators(*k),
            Status::RegisteredByTheorem,
            "the test space has a nonzero internal tangent vector, so the (Y,y)-internal \
             functor agrees with the classical tangent functor on manifolds",
        ),
        (Space::Torus(t), Space::Torus(u)) => torus::y_internal_dim(t, u),
        (Space::Torus(_), Space::Euclidean(_)) => zero(
            Status::Computed,
            "every smooth map T_α → ℝᵏ is constant (ℤ + αℤ is dense) and the D-topology on T_α \
             is indiscrete, so every germ into the test space is constant",
        ),
        // Remaining cells have a zero internal tangent space on one side.
        _ => unreachable!("orbit spaces have zero internal tangent space"),
    }
}

fn y_right(space: &Space, test: &Space) -> TangentReport {
    let functor = FunctorKind::y_right(test.clone());
    let zero = |status, why: &str| TangentReport::zero(space.clone(), functor.clone(), status, why);
    if classical_dim(space, &FunctorKind::Right) == 0 {
        return zero(
            Status::Computed,
            "the (Y,y)-right tangent space is a subspace of the right tangent space, which is 0",
        );
    }
    if classical_dim(test, &FunctorKind::Right) == 0 {
        return zero(
            Status::Computed,
            "the test space has no nonzero right tangent vector, so the span of pushforwards is 0",
        );
    }
    match (space, test) {
        (Space::Euclidean(k), _) => TangentReport::spanned(
            space.clone(),
            functor,
            euclidean_generators(*k),
            Status::RegisteredByTheorem,
            "the test space has a nonzero right tangent vector, so the (Y,y)-right functor \
             agrees with the classical tangent functor on manifolds",
        ),
        (Space::Orbit(h), Space::Orbit(g)) => orbit::theorem2_dim(g.n(), h.n())
            .expect("orbit dimensions are ≥ 1 by construction"),
        (Space::Orbit(_), Space::Euclidean(1)) => zero(
            Status::RegisteredByTheorem,
            "with test space (ℝ, 0) the construction is the Vincent-type tangent space, which \
             vanishes on H_n",
        ),
        (Space::Orbit(_), Space::Euclidean(_)) => TangentReport::undetermined(
            space.clone(),
            functor,
            "germs ℝᵏ → H_n for k ≥ 2 are not classified",
        ),
        _ => unreachable!("only Euclidean spaces and orbit spaces have nonzero right tangent spaces"),
    }
}

/// Catalog searched by [`distinguish`]: Euclidean spaces by dimension, then
/// tori in slope-pool order, then orbit spaces by dimension.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub max_euclidean: u32,
    pub slopes: Vec<QuadraticIrrational>,
    pub max_orbit: u32,
}

/// Default torus slopes: `√2, 1+√2, (1+√5)/2, √5, √3, 2+√3, √7`.
pub const DEFAULT_SLOPES: [&str; 7] = [
    "sqrt(2)",
    "1+sqrt(2)",
    "(1+sqrt(5))/2",
    "sqrt(5)",
    "sqrt(3)",
    "2+sqrt(3)",
    "sqrt(7)",
];

impl Default for Catalog {
    fn default() -> Self {
        let slopes = DEFAULT_SLOPES
            .iter()
            .map(|s| {
                parse_quadratic(s)
                    .ok()
                    .and_then(|v| v.as_irrational().cloned())
                    .expect("default slopes are irrational")
            })
            .collect();
        Catalog {
            max_euclidean: 3,
            slopes,
            max_orbit: 4,
        }
    }
}

impl Catalog {
    pub fn spaces(&self) -> Vec<Space> {
        let mut out: Vec<Space> = (0..=self.max_euclidean).map(Space::Euclidean).collect();
        out.extend(self.slopes.iter().cloned().map(Space::torus));
        out.extend((1..=self.max_orbit).map(Space::orbit));
        out
    }
}

/// First catalog space on which the two functors have different determined
/// dimensions. Undetermined cells never separate.
pub fn distinguish(f1: &FunctorKind, f2: &FunctorKind) -> Option<Space> {
    distinguish_in(&Catalog::default(), f1, f2)
}

pub fn distinguish_in(catalog: &Catalog, f1: &FunctorKind, f2: &FunctorKind) -> Option<Space> {
    catalog.spaces().into_iter().find(|space| {
        let d1 = tangent(space, f1).dimension.value();
        let d2 = tangent(space, f2).dimension.value();
        matches!((d1, d2), (Some(a), Some(b)) if a != b)
    })
}
