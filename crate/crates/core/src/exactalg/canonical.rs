use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::laurent::{IntPoly, RatPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("the zero polynomial has no canonical unit representative")]
    ZeroInput,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("not a perfect square up to units")]
pub struct NotASquare;

/// Representative of a class of polynomials under `f ≐ λ t^k f`.
///
/// Lowest exponent 0, positive leading coefficient, integer coefficients
/// with content 1. Two polynomials are unit-equivalent iff their canonical
/// forms are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalPoly(IntPoly);

impl CanonicalPoly {
    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn into_poly(self) -> IntPoly {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.max_exp().unwrap_or(0) as usize
    }

    /// Coefficients from degree 0 upward.
    pub fn coeffs(&self) -> Vec<BigInt> {
        self.0.to_dense().1
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, CanonError> {
        canonicalize(&IntPoly::from_i64s(0, coeffs))
    }
}

impl fmt::Display for CanonicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for CanonicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Canonical({})", self.0)
    }
}

pub fn content(f: &IntPoly) -> BigInt {
    f.terms().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
}

pub fn canonicalize(f: &IntPoly) -> Result<CanonicalPoly, CanonError> {
    let lo = f.min_exp().ok_or(CanonError::ZeroInput)?;
    let mut g = content(f);
    if f.leading().is_some_and(Signed::is_negative) {
        g = -g;
    }
    let out = IntPoly::from_terms(f.terms().map(|(e, c)| (e - lo, c / &g)));
    Ok(CanonicalPoly(out))
}

pub fn canonicalize_rational(f: &RatPoly) -> Result<CanonicalPoly, CanonError> {
    let den = f.terms().fold(BigInt::one(), |l, (_, c)| l.lcm(c.denom()));
    let scaled = f.map_coeffs(|c| (c * BigRational::from_integer(den.clone())).to_integer());
    canonicalize(&scaled)
}

/// `f ≐ f̄`.
pub fn is_symmetric(f: &IntPoly) -> Result<bool, CanonError> {
    Ok(canonicalize(f)? == canonicalize(&f.bar())?)
}

/// Whether the coefficient list is a palindrome exactly (no sign twist).
pub fn is_palindromic(f: &IntPoly) -> bool {
    let (_, c) = f.to_dense();
    c.iter().eq(c.iter().rev())
}

/// Square root up to units: returns `s` with `s² ≐ f`.
///
/// Works on the canonical form, trying both signs of the leading term.
pub fn sqrt_exact(f: &IntPoly) -> Result<IntPoly, NotASquare> {
    let c = canonicalize(f).map_err(|_| NotASquare)?;
    let base = c.into_poly();
    sqrt_dense(&base).or_else(|| sqrt_dense(&-&base)).ok_or(NotASquare)
}

fn sqrt_dense(f: &IntPoly) -> Option<IntPoly> {
    let (_, c) = f.to_dense();
    let deg = c.len().checked_sub(1)?;
    if deg % 2 == 1 {
        return None;
    }
    let d = deg / 2;
    let lead = c.last()?;
    if lead.is_negative() {
        return None;
    }
    let r = lead.sqrt();
    if &(&r * &r) != lead {
        return None;
    }
    let two_r = &r * 2u32;
    let mut s = vec![BigInt::zero(); d + 1];
    s[d] = r;
    // Coefficient of t^(d+j) in s² fixes s_j once s_{j+1..d} are known.
    for j in (0..d).rev() {
        let mut acc = c[d + j].clone();
        for i in (j + 1)..=d {
            let k = d + j - i;
            if k > j && k <= d {
                acc -= &s[i] * &s[k];
            }
        }
        let (q, rem) = acc.div_rem(&two_r);
        if !rem.is_zero() {
            return None;
        }
        s[j] = q;
    }
    let s = IntPoly::from_coeffs(0, s);
    (&s * &s == *f).then_some(s)
}
