//! The exact non-norm certificate: unit-circle roots by a coefficient bound,
//! then irreducibility by descending to `u = t + 1/t` and Eisenstein at 2.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactalg::{CanonicalPoly, IntPoly};

use super::ObstructError;

/// `f = l (z^r + … + 1) + Σ_{k=1}^{r/2} a_k (z^{r−k} + z^k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LakatosData {
    pub l: BigInt,
    /// `a_1, …, a_{r/2}`. At `k = r/2` the two monomials coincide, so the
    /// middle coefficient of `f` is `l + 2a_{r/2}`.
    pub a: Vec<BigRational>,
    pub pass: bool,
}

fn palindromic_coeffs(f: &CanonicalPoly) -> Result<Vec<BigInt>, ObstructError> {
    let c = f.coeffs();
    if !c.iter().eq(c.iter().rev()) {
        return Err(ObstructError::NotSymmetric(f.to_string()));
    }
    Ok(c)
}

pub fn lakatos_decompose(f: &CanonicalPoly) -> Result<LakatosData, ObstructError> {
    let c = palindromic_coeffs(f)?;
    let r = c.len() - 1;
    if r < 2 || r % 2 == 1 {
        return Err(ObstructError::NotLakatosShape(f.to_string()));
    }
    let half = r / 2;
    let l = c[0].clone();
    let a: Vec<BigRational> = (1..=half)
        .map(|k| {
            let diff = BigRational::from_integer(&c[k] - &l);
            if k == half {
                diff / BigRational::from_integer(2.into())
            } else {
                diff
            }
        })
        .collect();
    let bound: BigRational = a.iter().map(|x| x.abs()).sum::<BigRational>() * BigRational::from_integer(2.into());
    let pass = BigRational::from_integer(l.abs()) >= bound;
    Ok(LakatosData { l, a, pass })
}

/// Whether the coefficient bound certifies that every root lies on the
/// unit circle.
pub fn lakatos_check(f: &CanonicalPoly) -> Result<bool, ObstructError> {
    Ok(lakatos_decompose(f)?.pass)
}

/// The degree-`b` polynomial `l` with `f(t) = t^b · l(t + 1/t)`.
pub fn symmetric_descent(f: &CanonicalPoly) -> Result<IntPoly, ObstructError> {
    let c = palindromic_coeffs(f)?;
    if (c.len() - 1) % 2 == 1 {
        return Err(ObstructError::NotLakatosShape(f.to_string()));
    }
    let b = (c.len() - 1) / 2;
    let u = IntPoly::t();
    // P_j(u) = t^j + t^{-j}: P_1 = u, P_2 = u² − 2, P_{j+1} = u P_j − P_{j−1}.
    let mut prev = IntPoly::from_int(2);
    let mut cur = u.clone();
    let mut l = IntPoly::constant(c[b].clone());
    for j in 1..=b {
        l.add_assign_ref(&cur.scale(&c[b + j]));
        let next = &(&u * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(l)
}

/// Eisenstein at 2 applied to `u^b l(1/u)`: leading coefficient odd, every
/// other coefficient even, constant term not divisible by 4.
pub fn eisenstein_at_2(l: &IntPoly) -> bool {
    let (shift, c) = l.to_dense();
    if shift != 0 || c.len() < 2 {
        return false;
    }
    // Reversal: leading ← c[0], constant ← c[last].
    let lead = &c[0];
    let constant = c.last().unwrap();
    let two = BigInt::from(2);
    let four = BigInt::from(4);
    !(lead % &two).is_zero() && c[1..].iter().all(|x| (x % &two).is_zero()) && !(constant % &four).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(c: &[i64]) -> CanonicalPoly {
        CanonicalPoly::from_i64s(c).unwrap()
    }

    #[test]
    fn lakatos_examples() {
        let d = lakatos_decompose(&canon(&[2, 3, 2])).unwrap();
        assert_eq!(d.l, 2.into());
        assert!(d.pass);
        assert!(lakatos_check(&canon(&[2, 1, 2])).unwrap());
        // l = 1, a_1 = 5 (middle coefficient 1 + 2·5)
        assert!(!lakatos_check(&canon(&[1, 11, 1])).unwrap());
        assert!(lakatos_check(&canon(&[2, 3])).is_err());
        assert!(lakatos_check(&canon(&[1, 1, 2])).is_err());
    }

    #[test]
    fn descent_examples() {
        assert_eq!(
            symmetric_descent(&canon(&[2, 3, 2])).unwrap(),
            IntPoly::from_i64s(0, &[3, 2])
        );
        assert_eq!(
            symmetric_descent(&canon(&[2, 2, 3, 2, 2])).unwrap(),
            IntPoly::from_i64s(0, &[-1, 2, 2])
        );
        assert_eq!(
            symmetric_descent(&canon(&[1, 0, 1])).unwrap(),
            IntPoly::from_i64s(0, &[0, 1])
        );
    }

    #[test]
    fn eisenstein_examples() {
        assert!(eisenstein_at_2(&IntPoly::from_i64s(0, &[3, 2])));
        assert!(eisenstein_at_2(&IntPoly::from_i64s(0, &[-1, 2, 2])));
        assert!(!eisenstein_at_2(&IntPoly::from_i64s(0, &[1, 0, 1])));
    }
}
