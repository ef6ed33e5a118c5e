//! Brute-force GL₂(ℤ) oracle and the shared test pool.
//!
//! Values are `(u + v√d)/w` with machine integers. Products live in
//! `ℚ(√d₁, √d₂)` with basis `1, √d₁, √d₂, √d₁√d₂`; basis index bits mark
//! which roots are present. When `d₁ = d₂` only the first two slots are used.

#![allow(dead_code)]

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surd {
    pub u: i128,
    pub v: i128,
    pub d: i128,
    pub w: i128,
}

pub const fn surd(u: i128, v: i128, d: i128, w: i128) -> Surd {
    Surd { u, v, d, w }
}

/// Twelve quadratic irrationals with small coefficients, each with its
/// integer presentation `(u, v, d, w)` and `d` square-free.
pub const POOL: [(&str, Surd); 12] = [
    ("sqrt(2)", surd(0, 1, 2, 1)),
    ("1+sqrt(2)", surd(1, 1, 2, 1)),
    ("(1+sqrt(5))/2", surd(1, 1, 5, 2)),
    ("sqrt(5)", surd(0, 1, 5, 1)),
    ("sqrt(3)", surd(0, 1, 3, 1)),
    ("2+sqrt(3)", surd(2, 1, 3, 1)),
    ("sqrt(7)", surd(0, 1, 7, 1)),
    ("(sqrt(2))/2", surd(0, 1, 2, 2)),
    ("3-sqrt(2)", surd(3, -1, 2, 1)),
    ("(1+sqrt(3))/2", surd(1, 1, 3, 2)),
    ("(2+sqrt(7))/3", surd(2, 1, 7, 3)),
    ("2*sqrt(2)", surd(0, 2, 2, 1)),
];

type V4 = [i128; 4];

fn mul(x: &V4, y: &V4, d1: i128, d2: i128) -> V4 {
    let mut out = [0; 4];
    for i in 0..4 {
        for j in 0..4 {
            let mut c = x[i] * y[j];
            if i & j & 1 != 0 {
                c *= d1;
            }
            if i & j & 2 != 0 {
                c *= d2;
            }
            out[i ^ j] += c;
        }
    }
    out
}

/// Whether `x = (a + b·y)/(c + d·y)` for some integer matrix with entries in
/// `[-bound, bound]` and `ad − bc = ±1`.
pub fn gl2z_exists(x: Surd, y: Surd, bound: i128) -> bool {
    let (d1, d2) = (x.d, y.d);
    let xs: V4 = [x.u, x.v, 0, 0];
    let ys: V4 = if d1 == d2 { [y.u, y.v, 0, 0] } else { [y.u, 0, y.v, 0] };
    let one: V4 = [1, 0, 0, 0];
    let scale = |k: i128, v: &V4| -> V4 { [k * v[0], k * v[1], k * v[2], k * v[3]] };
    let add = |p: &V4, q: &V4| -> V4 { [p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]] };
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    let det = a * d - b * c;
                    if det != 1 && det != -1 {
                        continue;
                    }
                    // x·(c·w_y + d·Y) = w_x·(a·w_y + b·Y), all scaled by w_x·w_y.
                    let denom = add(&scale(c * y.w, &one), &scale(d, &ys));
                    let lhs = mul(&xs, &denom, d1, d2);
                    let numer = add(&scale(a * y.w, &one), &scale(b, &ys));
                    let rhs = scale(x.w, &numer);
                    if lhs == rhs {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Same square-free radicand, read off the integer presentations.
pub fn same_field_oracle(x: Surd, y: Surd) -> bool {
    x.d == y.d
}
