//! Tangent-functor axioms checked on Euclidean catalog spaces.
//!
//! A candidate functor must return `ℝᵏ` on `ℝᵏ` and push registered smooth
//! maps forward functorially. Internal-type functors push classes of curves
//! `t ↦ f(t·eᵢ)` and read off the velocity; right-type functors push
//! derivations `∂/∂xᵢ` and evaluate `∂/∂xᵢ (yⱼ ∘ f)(0)` on coordinates. Both
//! routes are computed from the polynomial maps directly, then compared
//! with composition and identities.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};
use thiserror::Error;

use super::{classical_dim, tangent, Dimension, FunctorKind};
use crate::poly::MultiPoly;
use crate::quad::Rational;

/// Largest Euclidean dimension checked.
pub const MAX_CHECKED_DIM: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomError {
    #[error("hypothesis not met for {functor}: {reason}")]
    HypothesisNotMet { functor: FunctorKind, reason: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub functor: FunctorKind,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Matrix = Vec<Vec<Rational>>;

/// Polynomial map `ℝᵃ → ℝᵇ` with `f(0) = 0`.
#[derive(Clone, Debug)]
struct EuclideanMap {
    name: &'static str,
    source: usize,
    components: Vec<MultiPoly>,
}

impl EuclideanMap {
    fn target(&self) -> usize {
        self.components.len()
    }

    fn then(&self, outer: &EuclideanMap) -> EuclideanMap {
        EuclideanMap {
            name: "composite",
            source: self.source,
            components: outer
                .components
                .iter()
                .map(|c| c.substitute(&self.components))
                .collect(),
        }
    }

    fn identity(k: usize) -> EuclideanMap {
        EuclideanMap {
            name: "id",
            source: k,
            components: (0..k).map(|i| MultiPoly::var(k, i)).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    Curves,
    Derivations,
}

fn route(functor: &FunctorKind) -> Route {
    match functor {
        FunctorKind::Internal | FunctorKind::Vincent | FunctorKind::YInternal(_) => Route::Curves,
        FunctorKind::Right | FunctorKind::YRight(_) => Route::Derivations,
    }
}

/// Column `i` of `T(f)` in the bases `∂/∂xᵢ`, `∂/∂yⱼ`.
fn pushforward_matrix(f: &EuclideanMap, route: Route) -> Matrix {
    let (a, b) = (f.source, f.target());
    let mut m = vec![vec![Rational::zero(); a]; b];
    for i in 0..a {
        match route {
            Route::Curves => {
                let curve: Vec<MultiPoly> = (0..a)
                    .map(|k| if k == i { MultiPoly::var(1, 0) } else { MultiPoly::zero(1) })
                    .collect();
                for (j, c) in f.components.iter().enumerate() {
                    m[j][i] = c.substitute(&curve).restrict_to_first_axis().coeff(1);
                }
            }
            Route::Derivations => {
                for (j, c) in f.components.iter().enumerate() {
                    m[j][i] = c.derivative(i).constant_term();
                }
            }
        }
    }
    m
}

fn mat_mul(x: &Matrix, y: &Matrix, inner: usize, cols: usize) -> Matrix {
    x.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &row[k] * &y[k][j]).sum())
                .collect()
        })
        .collect()
}

fn identity_matrix(k: usize) -> Matrix {
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn registered_maps() -> Vec<EuclideanMap> {
    let x = |m: usize, i: usize| MultiPoly::var(m, i);
    vec![
        EuclideanMap {
            name: "curve",
            source: 1,
            components: vec![x(1, 0).scale(&q(3, 1)).sub(&x(1, 0).pow(2)), x(1, 0).pow(3).add(&x(1, 0).scale(&q(2, 1)))],
        },
        EuclideanMap {
            name: "fold",
            source: 2,
            components: vec![x(2, 0).mul(&x(2, 1)).add(&x(2, 0)).sub(&x(2, 1).scale(&q(4, 1)))],
        },
        EuclideanMap {
            name: "shear",
            source: 2,
            components: vec![x(2, 0).add(&x(2, 1).pow(2)), x(2, 1).scale(&q(-1, 2)).add(&x(2, 0).mul(&x(2, 1)))],
        },
        EuclideanMap {
            name: "immersion",
            source: 2,
            components: vec![
                x(2, 0).add(&x(2, 1).pow(2)),
                x(2, 0).mul(&x(2, 1)).sub(&x(2, 1)),
                x(2, 0).scale(&q(2, 1)).add(&x(2, 0).pow(3)),
            ],
        },
        EuclideanMap {
            name: "projection",
            source: 3,
            components: vec![x(3, 0).sub(&x(3, 2)).add(&x(3, 1).mul(&x(3, 2))), x(3, 1).add(&x(3, 0).pow(2))],
        },
        EuclideanMap {
            name: "twist",
            source: 3,
            components: vec![
                x(3, 1).scale(&q(2, 3)),
                x(3, 2).sub(&x(3, 0)).add(&x(3, 0).mul(&x(3, 1))),
                x(3, 0).add(&x(3, 2).pow(2)),
            ],
        },
        EuclideanMap {
            name: "squaring",
            source: 1,
            components: vec![x(1, 0).pow(2)],
        },
    ]
}

/// Checks dimensions on `ℝ⁰ … ℝ³` and functoriality of pushforwards of the
/// registered polynomial maps between them.
pub fn functor_axiom_check(functor: &FunctorKind) -> Result<AxiomReport, AxiomError> {
    match functor {
        FunctorKind::YInternal(test) if classical_dim(test, &FunctorKind::Internal) == 0 => {
            return Err(AxiomError::HypothesisNotMet {
                functor: functor.clone(),
                reason: "the test space has zero internal tangent space",
            });
        }
        FunctorKind::YRight(test) if classical_dim(test, &FunctorKind::Right) == 0 => {
            return Err(AxiomError::HypothesisNotMet {
                functor: functor.clone(),
                reason: "the test space has zero right tangent space",
            });
        }
        _ => {}
    }
    let route = route(functor);
    let mut checks = Vec::new();
    for k in 0..=MAX_CHECKED_DIM {
        let r = tangent(&super::Space::Euclidean(k), functor);
        checks.push(AxiomCheck {
            name: format!("dimension on R^{}", k),
            passed: r.dimension == Dimension::Determined(k as usize) && r.is_consistent(),
        });
        let id = pushforward_matrix(&EuclideanMap::identity(k as usize), route);
        checks.push(AxiomCheck {
            name: format!("identity on R^{}", k),
            passed: id == identity_matrix(k as usize),
        });
    }
    let maps = registered_maps();
    for f in &maps {
        for g in maps.iter().filter(|g| g.source == f.target()) {
            let tf = pushforward_matrix(f, route);
            let tg = pushforward_matrix(g, route);
            let tgf = pushforward_matrix(&f.then(g), route);
            checks.push(AxiomCheck {
                name: format!("T({} ∘ {}) = T({})·T({})", g.name, f.name, g.name, f.name),
                passed: tgf == mat_mul(&tg, &tf, f.target(), f.source),
            });
        }
    }
    Ok(AxiomReport {
        functor: functor.clone(),
        checks,
    })
}
