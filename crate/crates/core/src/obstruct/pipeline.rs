//! The determinant route: `det Φ(Z)` from the reduced presentation, and
//! its split into `f · g · h²`.

use serde::{Deserialize, Serialize};

use crate::exactalg::{canonicalize, is_symmetric, sqrt_exact, CanonicalPoly, IntPoly};
use crate::homology::PretzelSpec;
use crate::polymat::DetStrategy;
use crate::repcover::{build_phi_fox_matrix, Blocks, CharacterData, CompanionPair};

use super::ObstructError;

/// `Δ̃ = numerator · (t − 1)^{−denom_power}`; the denominator is a norm and
/// is never cancelled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedTAP {
    pub numerator: CanonicalPoly,
    pub denom_power: u32,
    pub factors: Option<TapFactors>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TapFactors {
    pub f: CanonicalPoly,
    pub g: CanonicalPoly,
    pub h: CanonicalPoly,
}

impl ReducedTAP {
    pub fn with_factors(self, f: CanonicalPoly, g: CanonicalPoly, h: CanonicalPoly) -> Self {
        Self {
            factors: Some(TapFactors { f, g, h }),
            ..self
        }
    }
}

/// `det Φ(Z)` for the standard character, canonicalized.
pub fn twisted_reduced_polynomial(spec: &PretzelSpec, strategy: &DetStrategy) -> Result<ReducedTAP, ObstructError> {
    twisted_reduced_polynomial_with(spec, &CharacterData::standard(spec.p as usize), strategy)
}

pub fn twisted_reduced_polynomial_with(
    spec: &PretzelSpec,
    chars: &CharacterData,
    strategy: &DetStrategy,
) -> Result<ReducedTAP, ObstructError> {
    let z = build_phi_fox_matrix(spec.n, spec.m, spec.sign, chars)?;
    let d = z.det(strategy)?;
    let numerator = canonicalize(&d).map_err(|_| ObstructError::DegenerateDeterminant)?;
    Ok(ReducedTAP {
        numerator,
        denom_power: 2,
        factors: None,
    })
}

/// `h = det(C_k)`, the square root of the repeated factor, from the `p×p`
/// block alone.
pub fn h_from_blocks(p: u64, k: i64) -> Result<CanonicalPoly, ObstructError> {
    let blocks = Blocks::new(&CompanionPair::new(p)?);
    let d = blocks.c_k(k as u32).det_bareiss()?;
    canonicalize(&d).map_err(|_| ObstructError::ZeroPolynomial("h"))
}

/// Exact quotient over ℚ that must land back in ℤ[t^{±1}].
pub fn divide(num: &IntPoly, den: &IntPoly, what: &'static str) -> Result<IntPoly, ObstructError> {
    num.to_rational()
        .div_exact(&den.to_rational())
        .ok()
        .and_then(|q| q.to_integer())
        .ok_or(ObstructError::NotDivisible(what))
}

/// `h` with `numerator ≐ f · g · h²`, symmetric and integral.
pub fn extract_h(
    numerator: &CanonicalPoly,
    f: &CanonicalPoly,
    g: &CanonicalPoly,
) -> Result<CanonicalPoly, ObstructError> {
    let q = divide(numerator.poly(), &(f.poly() * g.poly()), "numerator by f·g")?;
    let h = sqrt_exact(&q).map_err(|_| ObstructError::NotASquare)?;
    let h = canonicalize(&h).map_err(|_| ObstructError::ZeroPolynomial("h"))?;
    if !is_symmetric(h.poly()).unwrap_or(false) {
        return Err(ObstructError::NotSymmetric(h.to_string()));
    }
    Ok(h)
}

/// `g = numerator / (f · h²)`.
pub fn extract_g(
    numerator: &CanonicalPoly,
    f: &CanonicalPoly,
    h: &CanonicalPoly,
) -> Result<CanonicalPoly, ObstructError> {
    let h2 = h.poly() * h.poly();
    let g = divide(numerator.poly(), &(f.poly() * &h2), "numerator by f·h²")?;
    canonicalize(&g).map_err(|_| ObstructError::ZeroPolynomial("g"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(c: &[i64]) -> CanonicalPoly {
        CanonicalPoly::from_i64s(c).unwrap()
    }

    #[test]
    fn planted_square() {
        let f = canon(&[2, 3, 2]);
        let g = canon(&[2, 27, 2]);
        let h = IntPoly::from_i64s(0, &[1, 3, 1]);
        let num = canonicalize(&(&(f.poly() * g.poly()) * &(&h * &h))).unwrap();
        assert_eq!(extract_h(&num, &f, &g).unwrap(), canonicalize(&h).unwrap());
        let bad = canonicalize(&(&(f.poly() * g.poly()) * &IntPoly::from_i64s(0, &[2, 1]))).unwrap();
        assert_eq!(extract_h(&bad, &f, &g), Err(ObstructError::NotASquare));
    }
}
