//! Coefficient rings for [`LaurentPoly`](super::LaurentPoly).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact commutative ring usable as a polynomial coefficient.
///
/// Method names avoid the `std::ops` names so that both can be in scope.
pub trait Coeff: Clone + Eq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `self / rhs` when the quotient exists in the ring.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;
    /// Sign flag and absolute-value text, for polynomial rendering.
    fn render(&self) -> (bool, String);

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
    fn render(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
    fn render(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

/// Element of the two-element field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize, serde::Deserialize)]
pub struct F2(pub bool);

impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Coeff for F2 {
    fn zero() -> Self {
        F2(false)
    }
    fn one() -> Self {
        F2(true)
    }
    fn from_i64(v: i64) -> Self {
        F2(v.rem_euclid(2) == 1)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn plus(&self, rhs: &Self) -> Self {
        F2(self.0 ^ rhs.0)
    }
    fn minus(&self, rhs: &Self) -> Self {
        F2(self.0 ^ rhs.0)
    }
    fn times(&self, rhs: &Self) -> Self {
        F2(self.0 & rhs.0)
    }
    fn negated(&self) -> Self {
        *self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        rhs.0.then_some(*self)
    }
    fn render(&self) -> (bool, String) {
        (false, u8::from(self.0).to_string())
    }
}
