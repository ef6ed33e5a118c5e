//! Seeded generator of valid lifts `ℝᵐ → ℝⁿ` with `m > n`.
//!
//! Family: `F(x) = h(‖x‖²)·v + G(‖x‖²)·w` with `h(0) = G(0) = 0` and integer
//! direction vectors `v, w`, so `‖F‖² = h²|v|² + 2hG⟨v, w⟩ + G²|w|²` is a
//! polynomial in `‖x‖²`. For `m = 4` the family is sometimes precomposed
//! with the Hopf map `H: ℝ⁴ → ℝ³`, which satisfies `‖H(x)‖² = ‖x‖⁴`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{OrbitError, PolyLift, DEFAULT_DEGREE_BOUND};
use crate::poly::{MultiPoly, UniPoly};
use crate::quad::Rational;

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// `Σ_{i=1..=k} cᵢ tⁱ` with small integer coefficients and `c_k ≠ 0`.
fn vanishing_poly(rng: &mut ChaCha8Rng, k: usize) -> UniPoly {
    let mut coeffs: Vec<Rational> = (0..=k).map(|_| int(rng.gen_range(-3..=3))).collect();
    coeffs[0] = int(0);
    if k > 0 && coeffs[k] == int(0) {
        coeffs[k] = int(1);
    }
    UniPoly::new(coeffs)
}

/// Nonzero integer vector in `[-2, 2]ⁿ`.
fn direction(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    let mut v: Vec<i64> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
    if v.iter().all(|&c| c == 0) {
        let i = rng.gen_range(0..n);
        v[i] = 1;
    }
    v.into_iter().map(int).collect()
}

/// `h(s)·v + G(s)·w` where `s` is a polynomial in `nvars` variables.
fn radial_family(
    rng: &mut ChaCha8Rng,
    s: &MultiPoly,
    n: usize,
    k: usize,
) -> Vec<MultiPoly> {
    let h = vanishing_poly(rng, k);
    let kg = rng.gen_range(1..=k);
    let g = vanishing_poly(rng, kg);
    let v = direction(rng, n);
    let w = direction(rng, n);
    let hs = eval_at(&h, s);
    let gs = eval_at(&g, s);
    (0..n)
        .map(|i| hs.scale(&v[i]).add(&gs.scale(&w[i])))
        .collect()
}

fn eval_at(p: &UniPoly, s: &MultiPoly) -> MultiPoly {
    p.coeffs()
        .iter()
        .rev()
        .fold(MultiPoly::zero(s.nvars()), |acc, c| {
            acc.mul(s).add(&MultiPoly::constant(s.nvars(), c.clone()))
        })
}

fn hopf() -> Vec<MultiPoly> {
    let x = |i| MultiPoly::var(4, i);
    let sq = |i| x(i).mul(&x(i));
    let two = int(2);
    alloc::vec![
        sq(0).add(&sq(1)).sub(&sq(2)).sub(&sq(3)),
        x(0).mul(&x(2)).add(&x(1).mul(&x(3))).scale(&two),
        x(1).mul(&x(2)).sub(&x(0).mul(&x(3))).scale(&two),
    ]
}

/// A valid lift `ℝᵐ → ℝⁿ` of total degree at most `degree`, deterministic in
/// `seed`. Requires `m > n ≥ 1` and `2 ≤ degree ≤ 8`.
pub fn random_valid_lift(m: usize, n: usize, degree: usize, seed: u64) -> Result<PolyLift, OrbitError> {
    if n == 0 || m <= n {
        return Err(OrbitError::Precondition("random_valid_lift needs m > n ≥ 1"));
    }
    if !(2..=DEFAULT_DEGREE_BOUND).contains(&degree) {
        return Err(OrbitError::Precondition("random_valid_lift needs 2 ≤ degree ≤ 8"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let use_hopf = m == 4 && degree >= 4 && rng.gen_bool(0.5);
    let components = if use_hopf {
        let hx = hopf();
        if n == 3 {
            // s(‖y‖²)·P·y with P a signed permutation; ‖·‖² = s(t²)²·t².
            let k = if degree >= 6 { rng.gen_range(0..=1) } else { 0 };
            let mut s = vanishing_poly(&mut rng, k);
            s = s.add(&UniPoly::from_i64(&[rng.gen_range(1..=2)]));
            let outer = eval_at(&s, &MultiPoly::norm_squared(4).mul(&MultiPoly::norm_squared(4)));
            let mut perm = [0usize, 1, 2];
            for i in (1..3).rev() {
                perm.swap(i, rng.gen_range(0..=i));
            }
            perm.iter()
                .map(|&j| {
                    let sign = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
                    hx[j].mul(&outer).scale(&sign)
                })
                .collect()
        } else {
            radial_family(&mut rng, &MultiPoly::norm_squared(4).pow(2), n, degree / 4)
        }
    } else {
        radial_family(&mut rng, &MultiPoly::norm_squared(m), n, degree / 2)
    };
    PolyLift::new(m, components)
}
