//! Exact polynomial arithmetic: Laurent polynomials over ℤ, ℚ and 𝔽₂, the
//! unit-equivalence canonical form, and bit-packed 𝔽₂[t].

mod canonical;
mod coeff;
mod gf2;
mod laurent;
mod numtheory;
mod text;

pub use canonical::{
    canonicalize, canonicalize_rational, content, is_palindromic, is_symmetric, sqrt_exact, CanonError, CanonicalPoly,
    NotASquare,
};
pub use coeff::{Coeff, F2};
pub use gf2::F2Poly;
pub use laurent::{DivError, F2Laurent, IntPoly, LaurentPoly, RatPoly};
pub use numtheory::{
    cyclotomic_irreducible_by_trial, gf2_is_irreducible_cyclotomic, is_prime, multiplicative_order, prime_divisors,
    two_is_primitive_root, NotOddPrime,
};
pub use text::{int_poly_from_json, int_poly_to_json, rat_poly_from_json, rat_poly_to_json, PolyParseError};

/// `a ≐ b`: equal up to multiplication by `±λ t^k`. Zero is only
/// equivalent to zero.
pub fn unit_equiv(a: &IntPoly, b: &IntPoly) -> bool {
    match (canonicalize(a), canonicalize(b)) {
        (Ok(x), Ok(y)) => x == y,
        (Err(_), Err(_)) => true,
        _ => false,
    }
}

/// `gcd` over 𝔽₂[t] (monic by construction).
pub fn gf2_gcd(a: &F2Poly, b: &F2Poly) -> F2Poly {
    a.gcd(b)
}
