use thiserror::Error;

use super::gf2::F2Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{0} is not an odd prime")]
pub struct NotOddPrime(pub u64);

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicative order of `a` modulo `n`, for `gcd(a, n) = 1`.
pub fn multiplicative_order(a: u64, n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let a = a % n;
    let mut x = a;
    for k in 1..n {
        if x == 1 {
            return Some(k);
        }
        x = x * a % n;
    }
    None
}

/// Whether 2 generates `(ℤ/p)^×`.
pub fn two_is_primitive_root(p: u64) -> Result<bool, NotOddPrime> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(NotOddPrime(p));
    }
    Ok(multiplicative_order(2, p) == Some(p - 1))
}

/// Irreducibility of `1 + t + … + t^(p−1)` over 𝔽₂, decided by the order
/// of 2 mod `p`.
pub fn gf2_is_irreducible_cyclotomic(p: u64) -> Result<bool, NotOddPrime> {
    two_is_primitive_root(p)
}

/// Brute-force oracle: trial division of `Σ t^i` by every polynomial of
/// degree `1..=(p−1)/2` with nonzero constant term.
pub fn cyclotomic_irreducible_by_trial(p: u64) -> bool {
    let f = F2Poly::all_ones(p as usize);
    let half = (p as usize - 1) / 2;
    for d in 1..=half {
        for mask in (1u64 << d)..(1u64 << (d + 1)) {
            if mask & 1 == 0 {
                continue;
            }
            let g = F2Poly::from_exponents((0..=d).filter(|b| (mask >> b) & 1 == 1));
            if g.divides(&f) {
                return false;
            }
        }
    }
    true
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
