use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{is_prime, prime_divisors, two_is_primitive_root};
use crate::knotpres::{validate_params, KnotParamError, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error(transparent)]
    Knot(#[from] KnotParamError),
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),
}

/// Parameters of `P(2n, m, −(2n±1), −m)` together with the cover order `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PretzelSpec {
    pub n: i64,
    pub m: i64,
    pub p: u64,
    pub sign: Sign,
}

impl PretzelSpec {
    pub fn new(n: i64, m: i64, p: u64, sign: Sign) -> Result<Self, SpecError> {
        validate_params(n, m)?;
        if p < 3 || !is_prime(p) {
            return Err(SpecError::NotOddPrime(p));
        }
        Ok(Self { n, m, p, sign })
    }

    /// Picks `p` as the smallest prime divisor of `m` modulo which 2 is a
    /// primitive root, falling back to the smallest prime divisor so that
    /// the hypothesis report can say what went wrong.
    pub fn with_default_p(n: i64, m: i64, sign: Sign) -> Result<Self, SpecError> {
        validate_params(n, m)?;
        let p = default_prime(m as u64).expect("m ≥ 3 has a prime divisor");
        Self::new(n, m, p, sign)
    }

    /// `k = (m − 1)/2`.
    pub fn k(&self) -> i64 {
        (self.m - 1) / 2
    }

    /// `(a, b)` with `2n = b·p + a`, `0 ≤ a < p`.
    pub fn decomposition(&self) -> (i64, i64) {
        let p = self.p as i64;
        ((2 * self.n) % p, (2 * self.n) / p)
    }

    /// Crossing count of the third band, `2n ± 1`.
    pub fn third_band(&self) -> i64 {
        2 * self.n + self.sign.unit()
    }

    pub fn hypotheses(&self) -> HypothesisReport {
        hypothesis_check(self)
    }
}

impl fmt::Display for PretzelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P({}, {}, {}, {}) with p = {}",
            2 * self.n,
            self.m,
            -self.third_band(),
            -self.m,
            self.p
        )
    }
}

pub fn default_prime(m: u64) -> Option<u64> {
    let divisors = prime_divisors(m);
    divisors
        .iter()
        .copied()
        .find(|&q| q > 2 && two_is_primitive_root(q).unwrap_or(false))
        .or_else(|| divisors.into_iter().find(|&q| q > 2))
}

/// The individual conditions under which the obstruction applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub m_odd: bool,
    pub p_divides_m: bool,
    pub two_primitive_mod_p: bool,
    /// `p ∤ 2n(2n ± 1)`.
    pub p_coprime_to_bands: bool,
    /// `n ≥ (p+1)/2`, equivalently `b ≥ 1`.
    pub n_large_enough: bool,
    pub not_3_5: bool,
    pub a: i64,
    pub b: i64,
    pub k: i64,
}

impl HypothesisReport {
    pub fn all_pass(&self) -> bool {
        self.m_odd
            && self.p_divides_m
            && self.two_primitive_mod_p
            && self.p_coprime_to_bands
            && self.n_large_enough
            && self.not_3_5
    }

    /// Names of the failing flags, in declaration order.
    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.m_odd, "m_odd"),
            (self.p_divides_m, "p_divides_m"),
            (self.two_primitive_mod_p, "two_primitive_mod_p"),
            (self.p_coprime_to_bands, "p_coprime_to_bands"),
            (self.n_large_enough, "n_large_enough"),
            (self.not_3_5, "not_3_5"),
        ]
        .into_iter()
        .filter_map(|(ok, name)| (!ok).then_some(name))
        .collect()
    }

    /// Conditions that make `H₁(Σ_p; ℤ₂)` a nontrivial irreducible module.
    pub fn irreducibility_conditions(&self) -> bool {
        self.p_divides_m && self.two_primitive_mod_p && self.p_coprime_to_bands
    }
}

pub fn hypothesis_check(spec: &PretzelSpec) -> HypothesisReport {
    let p = spec.p as i64;
    let (a, b) = spec.decomposition();
    let two_n = 2 * spec.n;
    HypothesisReport {
        m_odd: spec.m % 2 != 0,
        p_divides_m: spec.m % p == 0,
        two_primitive_mod_p: two_is_primitive_root(spec.p).unwrap_or(false),
        p_coprime_to_bands: two_n % p != 0 && spec.third_band() % p != 0,
        n_large_enough: 2 * spec.n > p,
        not_3_5: (spec.n, spec.p) != (3, 5),
        a,
        b,
        k: spec.k(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_row_decomposition() {
        let r = PretzelSpec::new(6, 11, 11, Sign::Plus).unwrap().hypotheses();
        assert!(r.all_pass());
        assert_eq!((r.a, r.b, r.k), (1, 1, 5));
    }

    #[test]
    fn excluded_pair() {
        let r = PretzelSpec::new(3, 5, 5, Sign::Plus).unwrap().hypotheses();
        assert_eq!(r.failures(), vec!["not_3_5"]);
    }

    #[test]
    fn seven_is_not_primitive() {
        let r = PretzelSpec::new(3, 7, 7, Sign::Plus).unwrap().hypotheses();
        assert!(!r.two_primitive_mod_p);
        assert!(!r.all_pass());
    }

    #[test]
    fn boundary_a_equals_p_minus_one() {
        // 2n = 10 = 11 − 1, so p | 2n + 1.
        let r = PretzelSpec::new(5, 11, 11, Sign::Plus).unwrap().hypotheses();
        assert_eq!(r.a, 10);
        assert!(!r.p_coprime_to_bands);
        // The minus family only excludes p | 2n − 1.
        let r = PretzelSpec::new(5, 11, 11, Sign::Minus).unwrap().hypotheses();
        assert!(r.p_coprime_to_bands);
    }

    #[test]
    fn default_prime_choice() {
        assert_eq!(default_prime(11), Some(11));
        assert_eq!(default_prime(7), Some(7));
        // 7 fails, 5 passes.
        assert_eq!(default_prime(35), Some(5));
        assert_eq!(default_prime(21), Some(3));
        assert_eq!(
            PretzelSpec::with_default_p(3, 6, Sign::Plus),
            Err(SpecError::Knot(KnotParamError::MEven(6)))
        );
    }

    #[test]
    fn rejects_bad_primes() {
        assert_eq!(PretzelSpec::new(2, 3, 9, Sign::Plus), Err(SpecError::NotOddPrime(9)));
        assert_eq!(PretzelSpec::new(2, 3, 2, Sign::Plus), Err(SpecError::NotOddPrime(2)));
    }
}
