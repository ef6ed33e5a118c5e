//! Space specifications: `R^k`, `torus:<expr>`, `orbit:<n>`.

use std::fmt;

use difftangent::functor::Space;
use difftangent::orbit::OrbitSpace;
use difftangent::quad::{parse_quadratic, QuadValue, QuadraticIrrational};
use difftangent::torus::{IrrationalTorus, TorusError};

/// An input error with a byte offset into the offending argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub position: usize,
    pub message: String,
}

impl SpecError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        SpecError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for SpecError {}

/// Parses a quadratic-irrational expression, rejecting rational values.
pub fn parse_slope(expr: &str) -> Result<QuadraticIrrational, SpecError> {
    parse_slope_at(expr, 0)
}

fn parse_slope_at(expr: &str, offset: usize) -> Result<QuadraticIrrational, SpecError> {
    match parse_quadratic(expr) {
        Ok(QuadValue::Irrational(x)) => Ok(x),
        Ok(QuadValue::Rational(_)) => Err(SpecError::new(offset, TorusError::RationalSlope.to_string())),
        Err(e) => Err(SpecError::new(offset + e.position, e.kind.to_string())),
    }
}

fn parse_count(digits: &str, offset: usize) -> Result<u32, SpecError> {
    let trimmed = digits.trim();
    if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
        return Err(SpecError::new(offset, "expected a non-negative integer"));
    }
    trimmed
        .parse()
        .map_err(|_| SpecError::new(offset, "dimension out of range"))
}

pub fn parse_space(spec: &str) -> Result<Space, SpecError> {
    let s = spec.trim_start();
    let lead = spec.len() - s.len();
    if let Some(rest) = s.strip_prefix("R^") {
        return Ok(Space::Euclidean(parse_count(rest, lead + 2)?));
    }
    if let Some(rest) = s.strip_prefix("torus:") {
        let slope = parse_slope_at(rest, lead + 6)?;
        return Ok(Space::Torus(IrrationalTorus::new(slope)));
    }
    if let Some(rest) = s.strip_prefix("orbit:") {
        let n = parse_count(rest, lead + 6)?;
        return OrbitSpace::new(n)
            .map(Space::Orbit)
            .map_err(|e| SpecError::new(lead + 6, e.to_string()));
    }
    Err(SpecError::new(lead, "expected R^<k>, torus:<expr> or orbit:<n>"))
}
