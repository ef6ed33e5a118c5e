//! Exact tangent-space computations on a catalog of diffeological spaces:
//! Euclidean spaces, irrational tori with quadratic-irrational slopes, and
//! orbit spaces `ℝⁿ/O(n)`.
#![no_std]
extern crate alloc;

pub mod functor;
pub mod orbit;
pub mod poly;
pub mod quad;
pub mod torus;
