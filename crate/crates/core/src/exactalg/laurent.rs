use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use super::coeff::{Coeff, F2};

/// Laurent polynomial in one variable `t`, stored sparsely by exponent.
///
/// Zero coefficients are never stored, so structural equality is ring
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<C> {
    terms: BTreeMap<i64, C>,
}

pub type IntPoly = LaurentPoly<BigInt>;
pub type RatPoly = LaurentPoly<BigRational>;
pub type F2Laurent = LaurentPoly<F2>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DivError {
    #[error("division by the zero polynomial")]
    ByZero,
    #[error("not divisible")]
    NotDivisible,
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `Σ coeffs[i] t^(shift + i)`.
    pub fn from_coeffs(shift: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (shift + i as i64, c))
            .collect();
        Self { terms }
    }

    pub fn from_i64s(shift: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(shift, coeffs.iter().map(|&c| C::from_i64(c)))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    /// `Σ_{i=lo}^{hi} (sign·t)^i`, with `sign = ±1`.
    pub fn geometric(lo: i64, hi: i64, sign: i64) -> Self {
        Self::from_terms((lo..=hi).map(|i| {
            let c = if sign < 0 && i.rem_euclid(2) == 1 { -1 } else { 1 };
            (i, C::from_i64(c))
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(C::is_one)
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp − min_exp`, the degree after shifting to an ordinary
    /// polynomial with nonzero constant term.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    pub fn leading(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    pub fn trailing(&self) -> Option<&C> {
        self.terms.values().next()
    }

    /// Dense coefficient list from `min_exp` upward, with its shift.
    pub fn to_dense(&self) -> (i64, Vec<C>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut out = vec![C::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    pub fn add_term(&mut self, exp: i64, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let sum = old.plus(c);
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, rhs: &Self) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }

    pub fn sub_assign_ref(&mut self, rhs: &Self) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &c.negated());
        }
    }

    /// Adds `c · t^shift · rhs` into `self`.
    pub fn add_scaled(&mut self, rhs: &Self, c: &C, shift: i64) {
        if c.is_zero() {
            return;
        }
        for (&e, d) in &rhs.terms {
            self.add_term(e + shift, &d.times(c));
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, d)| (e, d.times(c)))
                .filter(|(_, d)| !d.is_zero())
                .collect(),
        }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// The involution `t ↦ t⁻¹`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitution `t ↦ t^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitute_power needs a nonzero exponent");
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    /// Exact quotient `self / den`, or [`DivError::NotDivisible`] when no
    /// Laurent polynomial over the same coefficient ring satisfies
    /// `q · den = self`.
    pub fn div_exact(&self, den: &Self) -> Result<Self, DivError> {
        if den.is_zero() {
            return Err(DivError::ByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (ns, mut r) = self.to_dense();
        let (ds, d) = den.to_dense();
        if r.len() < d.len() {
            return Err(DivError::NotDivisible);
        }
        let dl = d.len();
        let lead = d.last().unwrap();
        let mut q = vec![C::zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let top = &r[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lead).ok_or(DivError::NotDivisible)?;
            for (j, dj) in d.iter().enumerate() {
                r[i + j] = r[i + j].minus(&dj.times(&c));
            }
            q[i] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(DivError::NotDivisible);
        }
        Ok(Self::from_coeffs(ns - ds, q))
    }

    pub fn divides(&self, num: &Self) -> bool {
        num.div_exact(self).is_ok()
    }
}

impl IntPoly {
    /// Value at an integer point; negative exponents are allowed only when
    /// the result is still integral.
    pub fn eval(&self, x: &BigInt) -> Option<BigInt> {
        let Some(lo) = self.min_exp() else {
            return Some(BigInt::from(0));
        };
        if lo < 0 {
            let r = self.to_rational().eval(&BigRational::from_integer(x.clone()))?;
            return r.is_integer().then(|| r.to_integer());
        }
        Some(horner(self, x))
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    pub fn to_f2(&self) -> F2Laurent {
        self.map_coeffs(|c| F2(c.bit(0)))
    }

    /// `Σ_i |c_i|`, a crude size measure.
    pub fn l1_norm(&self) -> BigInt {
        self.terms().map(|(_, c)| num_traits::Signed::abs(c)).sum()
    }

    pub fn coeffs_i64(&self) -> Option<(i64, Vec<i64>)> {
        let (s, v) = self.to_dense();
        let v = v.iter().map(|c| i64::try_from(c).ok()).collect::<Option<Vec<_>>>()?;
        Some((s, v))
    }
}

fn horner(p: &IntPoly, x: &BigInt) -> BigInt {
    let Some(hi) = p.max_exp() else {
        return BigInt::from(0);
    };
    let mut acc = BigInt::from(0);
    let mut e = hi;
    let mut it = p.terms().rev().peekable();
    loop {
        if let Some(&(te, c)) = it.peek() {
            if te == e {
                acc += c;
                it.next();
            }
        }
        if e == 0 {
            break;
        }
        acc *= x;
        e -= 1;
    }
    acc
}

impl RatPoly {
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        if Coeff::is_zero(x) && self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = <BigRational as Coeff>::zero();
        for (e, c) in self.terms() {
            let xe = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += c * xe;
        }
        Some(acc)
    }

    /// The same polynomial over ℤ when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<IntPoly> {
        self.terms()
            .all(|(_, c)| c.is_integer())
            .then(|| self.map_coeffs(|c| c.to_integer()))
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    /// Highest degree first, e.g. `2t^2-5t+2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let (neg, abs) = c.render();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let unit = abs == "1";
            match e {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$m(rhs)
            }
        }
        impl<C: Coeff> $tr<LaurentPoly<C>> for &LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                self.$m(&rhs)
            }
        }
    };
}

impl<C: Coeff> Add<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<C: Coeff> Sub<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<C: Coeff> Mul<&LaurentPoly<C>> for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero();
        for (&e, c) in &self.terms {
            out.add_scaled(rhs, c, e);
        }
        out
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c.negated())).collect(),
        }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coeff> std::iter::Sum for LaurentPoly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        let mut acc = Self::zero();
        for p in iter {
            acc.add_assign_ref(&p);
        }
        acc
    }
}

impl<C: Coeff> std::iter::Product for LaurentPoly<C> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl<C: Coeff> From<C> for LaurentPoly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

impl IntPoly {
    pub fn from_int(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(shift: i64, c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(shift, c)
    }

    #[test]
    fn difference_of_squares() {
        let a = ip(0, &[1, 1]);
        let b = ip(0, &[-1, 1]);
        assert_eq!(&a * &b, ip(0, &[-1, 0, 1]));
    }

    #[test]
    fn square_of_alternating_sum() {
        let d = ip(0, &[1, -1, 1]);
        assert_eq!(&d * &d, ip(0, &[1, -2, 3, -2, 1]));
    }

    #[test]
    fn zeros_are_pruned() {
        let a = ip(0, &[1, 2]);
        assert!((&a - &a).is_zero());
        assert_eq!((&a - &a).num_terms(), 0);
    }

    #[test]
    fn bar_negates_exponents() {
        let f = ip(0, &[2, 3, 2]);
        assert_eq!(f.bar(), ip(-2, &[2, 3, 2]));
    }

    #[test]
    fn exact_division() {
        let num = ip(0, &[-1, 0, 1]);
        assert_eq!(num.div_exact(&ip(0, &[-1, 1])), Ok(ip(0, &[1, 1])));
        assert_eq!(
            ip(0, &[2, 27, 2]).div_exact(&ip(0, &[2, 3, 2])),
            Err(DivError::NotDivisible)
        );
        assert_eq!(num.div_exact(&IntPoly::zero()), Err(DivError::ByZero));
        let lau = ip(-3, &[1, 0, 0, -1]);
        assert_eq!(lau.div_exact(&ip(-1, &[1, -1])), Ok(ip(-2, &[1, 1, 1])));
    }

    #[test]
    fn display_is_highest_degree_first() {
        assert_eq!(ip(0, &[2, 27, 2]).to_string(), "2t^2+27t+2");
        assert_eq!(ip(0, &[6, -35, 6]).to_string(), "6t^2-35t+6");
        assert_eq!(ip(-1, &[1, 0, -1]).to_string(), "-t+t^-1");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn eval_uses_horner() {
        let f = ip(0, &[2, 3, 2]);
        assert_eq!(f.eval(&BigInt::from(2)), Some(BigInt::from(16)));
        assert_eq!(ip(-1, &[1, 0, 2]).eval(&BigInt::from(2)), None);
        assert_eq!(ip(-1, &[4, 0, 2]).eval(&BigInt::from(2)), Some(BigInt::from(6)));
    }

    #[test]
    fn geometric_sums() {
        assert_eq!(IntPoly::geometric(0, 2, -1), ip(0, &[1, -1, 1]));
        assert_eq!(IntPoly::geometric(1, 3, 1), ip(1, &[1, 1, 1]));
    }
}
