//! Closed forms for the two non-square factors of the reduced twisted
//! polynomial.

use crate::exactalg::{canonicalize, CanonicalPoly, IntPoly};
use crate::knotpres::Sign;
use crate::polymat::IntMatrix;

use super::ObstructError;

fn poly(shift: i64, c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(shift, c)
}

fn int(c: i64) -> IntPoly {
    IntPoly::from_int(c)
}

/// `Σ_{i=lo}^{hi} (−t)^i`
fn alt_sum(lo: i64, hi: i64) -> IntPoly {
    IntPoly::geometric(lo, hi, -1)
}

fn neg_t_pow(e: i64) -> IntPoly {
    IntPoly::monomial(if e % 2 == 0 { 1.into() } else { (-1).into() }, e)
}

/// `(a, b)` with `2n = b·p + a`, requiring `0 < a < p − 1` and `b ≥ 1`.
pub fn decompose(n: i64, p: u64) -> Result<(i64, i64), ObstructError> {
    let p = p as i64;
    let (a, b) = ((2 * n) % p, (2 * n) / p);
    if a == 0 || a >= p - 1 || b < 1 {
        return Err(ObstructError::BadDecomposition { n, p: p as u64, a, b });
    }
    Ok((a, b))
}

/// `2 Σ_{i=0}^{2b} t^i ± t^b`.
pub fn f_poly(b: i64, sign: Sign) -> Result<CanonicalPoly, ObstructError> {
    if b < 1 {
        return Err(ObstructError::BNotPositive(b));
    }
    let mut f = IntPoly::geometric(0, 2 * b, 1).scale(&2.into());
    f.add_term(b, &sign.unit().into());
    Ok(canonicalize(&f).expect("nonzero"))
}

/// `(4a−6) Σ_{i=0}^{2b} (−t)^i + (−t)^b − 4(p−4) t (Σ_{i=0}^{b−1} (−t)^i)²`
pub fn g_poly(n: i64, p: u64) -> Result<CanonicalPoly, ObstructError> {
    let (a, b) = decompose(n, p)?;
    let s = alt_sum(0, b - 1);
    let sq = &(&s * &s) * &IntPoly::t();
    let g = &(&alt_sum(0, 2 * b).scale(&(4 * a - 6).into()) + &neg_t_pow(b)) - &sq.scale(&(4 * (p as i64 - 4)).into());
    canonicalize(&g).map_err(|_| ObstructError::ZeroPolynomial("g"))
}

/// `β_b = 2 Σ_{i=1}^{b} (−t)^i`
pub fn beta(b: i64) -> IntPoly {
    alt_sum(1, b).scale(&2.into())
}

/// `Ψ_b = (−1)^b t (2 Σ_{i=0}^{2b} (−t)^i + (−t)^b)`
pub fn psi(b: i64) -> IntPoly {
    let inner = &alt_sum(0, 2 * b).scale(&2.into()) + &neg_t_pow(b);
    (&inner * &IntPoly::t()).scale(&(if b % 2 == 0 { 1 } else { -1 }).into())
}

/// The 3×3 matrix whose determinant is `(1 + t) g_n`.
pub fn g_matrix(n: i64, p: u64) -> Result<IntMatrix, ObstructError> {
    let (a, b) = decompose(n, p)?;
    let p = p as i64;
    let sb = if b % 2 == 0 { 2 } else { -2 };
    Ok(IntMatrix::from_rows(vec![
        vec![beta(b).scale(&(p - a - 2).into()), int(-1), int(-1)],
        vec![psi(b), int(sb), poly(b + 1, &[-2])],
        vec![beta(b + 1).scale(&(a - 2).into()), int(1), poly(1, &[-1])],
    ])
    .expect("3×3"))
}

/// `det(G_n) / (1 + t)`, canonicalized.
pub fn g_matrix_route(n: i64, p: u64) -> Result<CanonicalPoly, ObstructError> {
    let d = g_matrix(n, p)?.det_cofactor()?;
    let q = d
        .div_exact(&poly(0, &[1, 1]))
        .map_err(|_| ObstructError::NotDivisibleByOnePlusT { n, p })?;
    canonicalize(&q).map_err(|_| ObstructError::ZeroPolynomial("g"))
}
