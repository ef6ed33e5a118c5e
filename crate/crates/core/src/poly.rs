//! Dense univariate and sparse multivariate polynomials over `Q`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::quad::Rational;

/// Polynomial in one variable `t`, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    /// `t`
    pub fn identity() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// `self(inner(t))`, by Horner's rule.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&UniPoly::new(vec![c.clone()]));
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// `self(x₁² + … + x_m²)` as a polynomial in `m` variables.
    pub fn of_norm_squared(&self, m: usize) -> MultiPoly {
        let norm = MultiPoly::norm_squared(m);
        let mut acc = MultiPoly::zero(m);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&norm).add(&MultiPoly::constant(m, c.clone()));
        }
        acc
    }
}

fn write_coeff_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &Rational,
    monomial: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if neg {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    let unit = abs.is_one();
    if monomial.is_empty() || !unit {
        if abs.is_integer() {
            write!(f, "{}", abs.numer())?;
        } else {
            write!(f, "{}/{}", abs.numer(), abs.denom())?;
        }
        if !monomial.is_empty() {
            f.write_str("*")?;
        }
    }
    f.write_str(monomial)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => alloc::string::String::new(),
                1 => "t".into(),
                _ => alloc::format!("t^{}", k),
            };
            write_coeff_term(f, first, c, &mono)?;
            first = false;
        }
        Ok(())
    }
}

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Sparse polynomial in `x₁ … x_n` over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The coordinate `x_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exponents: Exponents, c: Rational) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    /// `x₁² + … + x_n²`
    pub fn norm_squared(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = 2;
            p.add_term(e, Rational::one());
        }
        p
    }

    /// Adds `c·x^e` in place.
    pub fn add_term(&mut self, exponents: Exponents, c: Rational) {
        debug_assert_eq!(exponents.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        // Integer numerators over a common denominator; one reduction per term.
        let (d1, n1) = self.integer_form();
        let (d2, n2) = other.integer_form();
        let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (e1, c1) in &n1 {
            for (e2, c2) in &n2 {
                let e = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        let denom = d1 * d2;
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e, Rational::new(c, denom.clone())))
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    fn integer_form(&self) -> (BigInt, Vec<(&Exponents, BigInt)>) {
        let denom = self
            .terms
            .values()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let numers = self
            .terms
            .iter()
            .map(|(e, c)| (e, c.numer() * (&denom / c.denom())))
            .collect();
        (denom, numers)
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::constant(self.nvars, Rational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// `∂/∂x_{i+1}`.
    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut d = e.clone();
            d[i] -= 1;
            out.add_term(d, c * Rational::from_integer(e[i].into()));
        }
        out
    }

    /// Substitutes `args[i]` for `x_{i+1}`; the result lives in the
    /// arguments' ring.
    pub fn substitute(&self, args: &[MultiPoly]) -> MultiPoly {
        assert_eq!(args.len(), self.nvars, "one argument per variable");
        let target = args.first().map_or(0, MultiPoly::nvars);
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (arg, &k) in args.iter().zip(e) {
                if k > 0 {
                    term = term.mul(&arg.pow(k));
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Restriction to the `x₁`-axis, as a polynomial in `r = x₁`.
    pub fn restrict_to_first_axis(&self) -> UniPoly {
        let mut coeffs: Vec<Rational> = Vec::new();
        for (e, c) in &self.terms {
            if e.iter().skip(1).any(|&k| k != 0) {
                continue;
            }
            let k = e.first().copied().unwrap_or(0) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::zero());
            }
            coeffs[k] += c;
        }
        UniPoly::new(coeffs)
    }

    /// Coefficients of the degree-one part, indexed by variable.
    pub fn linear_part(&self) -> Vec<Rational> {
        (0..self.nvars)
            .map(|i| {
                let mut e = vec![0; self.nvars];
                e[i] = 1;
                self.coeff(&e)
            })
            .collect()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Graded order, lowest degree first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let mut first = true;
        for (e, c) in terms {
            let mono = monomial_label(e);
            write_coeff_term(f, first, c, &mono)?;
            first = false;
        }
        Ok(())
    }
}

/// `x1^2*x3` style label; empty for the constant monomial.
pub fn monomial_label(e: &[u32]) -> alloc::string::String {
    use alloc::string::String;
    let mut s = String::new();
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&alloc::format!("x{}", i + 1));
        if k > 1 {
            s.push_str(&alloc::format!("^{}", k));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::rat;
    use alloc::string::ToString;

    #[test]
    fn uni_arithmetic() {
        let p = UniPoly::from_i64(&[1, 2]); // 1 + 2t
        let q = UniPoly::from_i64(&[0, 0, 1]); // t²
        assert_eq!(p.compose(&q), UniPoly::from_i64(&[1, 0, 2]));
        assert_eq!(q.compose(&p), UniPoly::from_i64(&[1, 4, 4]));
        assert_eq!(q.derivative(), UniPoly::from_i64(&[0, 2]));
        assert_eq!(p.eval(&rat(1, 2)), rat(2, 1));
        assert_eq!(UniPoly::from_i64(&[0, 0, 0]).degree(), None);
        assert_eq!(UniPoly::from_i64(&[0, 5, -7]).to_string(), "5*t-7*t^2");
    }

    #[test]
    fn multi_arithmetic() {
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        let s = x1.add(&x2);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[1, 1]), rat(2, 1));
        assert_eq!(sq.derivative(0), x1.add(&x2).scale(&rat(2, 1)));
        assert_eq!(sq.sub(&sq), MultiPoly::zero(2));
        assert_eq!(sq.to_string(), "x1^2+2*x1*x2+x2^2");
        assert_eq!(MultiPoly::norm_squared(3).total_degree(), Some(2));
    }

    #[test]
    fn substitution_and_axis() {
        // p(y1, y2) = y1*y2 + y2², y = (x1 + x2, x1 - x2)
        let y1 = MultiPoly::var(2, 0);
        let y2 = MultiPoly::var(2, 1);
        let p = y1.mul(&y2).add(&y2.mul(&y2));
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        let r = p.substitute(&[x1.add(&x2), x1.sub(&x2)]);
        // (x1² - x2²) + (x1 - x2)² = 2x1² - 2x1x2
        assert_eq!(r.to_string(), "2*x1^2-2*x1*x2");
        assert_eq!(r.restrict_to_first_axis(), UniPoly::from_i64(&[0, 0, 2]));
    }

    #[test]
    fn norm_squared_composition() {
        let psi = UniPoly::from_i64(&[0, 1, 1]); // t + t²
        let f = psi.of_norm_squared(2);
        assert_eq!(f.coeff(&[2, 2]), rat(2, 1));
        assert_eq!(f.coeff(&[4, 0]), rat(1, 1));
        assert_eq!(f.coeff(&[0, 2]), rat(1, 1));
        assert_eq!(f.linear_part(), vec![rat(0, 1), rat(0, 1)]);
    }
}
