use difftangent::functor::{
    distinguish, distinguish_in, functor_axiom_check, tangent, AxiomError, Catalog, Dimension, FunctorKind,
    Space, Status,
};
use difftangent::quad::{parse_quadratic, QuadraticIrrational};
use proptest::prelude::*;

const UNRELATED: [&str; 7] = ["sqrt(2)", "sqrt(3)", "sqrt(5)", "sqrt(6)", "sqrt(7)", "sqrt(10)", "sqrt(11)"];

fn slope(s: &str) -> QuadraticIrrational {
    parse_quadratic(s).unwrap().as_irrational().unwrap().clone()
}

fn test_spaces() -> Vec<Space> {
    let mut out: Vec<Space> = (0..=3).map(Space::Euclidean).collect();
    out.extend(["sqrt(2)", "(1+sqrt(5))/2", "sqrt(3)"].map(|s| Space::torus(slope(s))));
    out.extend((1..=4).map(Space::orbit));
    out
}

fn functors() -> Vec<FunctorKind> {
    let mut out = vec![FunctorKind::Internal, FunctorKind::Right, FunctorKind::Vincent];
    for t in test_spaces() {
        out.push(FunctorKind::y_internal(t.clone()));
        out.push(FunctorKind::y_right(t));
    }
    out
}

fn value(space: &Space, f: &FunctorKind) -> Option<usize> {
    tangent(space, f).dimension.value()
}

#[test]
fn every_report_is_consistent() {
    for space in Catalog::default().spaces() {
        for f in functors() {
            let r = tangent(&space, &f);
            assert!(r.is_consistent(), "{space} {f}: {r:?}");
            assert_eq!(r.space, space);
            assert_eq!(r.functor, f);
            assert!(!r.justification.is_empty());
        }
    }
}

#[test]
fn undetermined_cells_are_exactly_orbits_tested_by_planes() {
    for space in Catalog::default().spaces() {
        for f in functors() {
            let undetermined = tangent(&space, &f).dimension == Dimension::Undetermined;
            let expected = matches!(
                (&space, &f),
                (Space::Orbit(_), FunctorKind::YRight(t)) if matches!(**t, Space::Euclidean(j) if j >= 2)
            );
            assert_eq!(undetermined, expected, "{space} {f}");
        }
    }
}

#[test]
fn vincent_sandwich() {
    for space in Catalog::default().spaces() {
        let v = value(&space, &FunctorKind::Vincent).unwrap();
        let r = value(&space, &FunctorKind::Right).unwrap();
        let i = value(&space, &FunctorKind::Internal).unwrap();
        assert!(v <= r && v <= i, "{space}");
    }
}

#[test]
fn euclidean_spaces_agree_across_functors_meeting_hypotheses() {
    for k in 0..=3 {
        let space = Space::Euclidean(k);
        for f in functors() {
            if functor_axiom_check(&f).is_err() {
                continue;
            }
            assert_eq!(value(&space, &f), Some(k as usize), "R^{k} {f}");
        }
    }
}

#[test]
fn theorem2_matrix_through_dispatch() {
    for m in 1..=4 {
        for n in 1..=4 {
            let r = tangent(&Space::orbit(n), &FunctorKind::y_right(Space::orbit(m)));
            assert_eq!(r.dimension, Dimension::Determined((m <= n) as usize), "m={m} n={n}");
            let status = if m <= n { Status::Computed } else { Status::RegisteredByTheorem };
            assert_eq!(r.status, status);
        }
    }
}

#[test]
fn uncountability_proxy() {
    let spaces: Vec<Space> = UNRELATED.iter().map(|s| Space::torus(slope(s))).collect();
    for (i, a) in spaces.iter().enumerate() {
        for (j, b) in spaces.iter().enumerate() {
            let d = value(a, &FunctorKind::y_internal(b.clone()));
            assert_eq!(d, Some((i == j) as usize), "{a} tested by {b}");
        }
    }
    let catalog = Catalog {
        slopes: UNRELATED.iter().map(|s| slope(s)).collect(),
        ..Catalog::default()
    };
    for a in &spaces {
        for b in &spaces {
            let sep = distinguish_in(&catalog, &FunctorKind::y_internal(a.clone()), &FunctorKind::y_internal(b.clone()));
            assert_eq!(sep.is_some(), a != b);
        }
    }
}

#[test]
fn separation_is_sound_and_ordered() {
    let fs = functors();
    let spaces = Catalog::default().spaces();
    for f in &fs {
        for g in &fs {
            match distinguish(f, g) {
                Some(sep) => {
                    let (a, b) = (value(&sep, f), value(&sep, g));
                    assert!(a.is_some() && b.is_some() && a != b, "{f} vs {g} at {sep}");
                    // No earlier space separates.
                    let pos = spaces.iter().position(|s| *s == sep).unwrap();
                    for s in &spaces[..pos] {
                        let (a, b) = (value(s, f), value(s, g));
                        assert!(!(a.is_some() && b.is_some() && a != b));
                    }
                }
                None => {
                    for s in &spaces {
                        let (a, b) = (value(s, f), value(s, g));
                        assert!(!(a.is_some() && b.is_some() && a != b));
                    }
                }
            }
            assert_eq!(distinguish(f, g).is_some(), distinguish(g, f).is_some());
        }
    }
}

#[test]
fn axioms_and_hypotheses() {
    for f in functors() {
        let hypothesis = match &f {
            FunctorKind::YInternal(t) => value(t, &FunctorKind::Internal).unwrap() >= 1,
            FunctorKind::YRight(t) => value(t, &FunctorKind::Right).unwrap() >= 1,
            _ => true,
        };
        match functor_axiom_check(&f) {
            Ok(report) => {
                assert!(hypothesis, "{f}");
                assert!(report.passed(), "{f}: {:?}", report.checks);
            }
            Err(AxiomError::HypothesisNotMet { functor, .. }) => {
                assert!(!hypothesis, "{f}");
                assert_eq!(functor, f);
            }
        }
    }
}

proptest! {
    #[test]
    fn distinguish_is_deterministic(i in 0usize..25, j in 0usize..25) {
        let fs = functors();
        let (f, g) = (&fs[i % fs.len()], &fs[j % fs.len()]);
        prop_assert_eq!(distinguish(f, g), distinguish(f, g));
        if i % fs.len() == j % fs.len() {
            prop_assert_eq!(distinguish(f, g), None);
        }
    }
}
