//! Dense bit-packed polynomials over 𝔽₂.

use std::fmt;
use std::ops::{Add, Mul};

use super::laurent::F2Laurent;

/// Polynomial over 𝔽₂; bit `i` of the packed words is the coefficient of
/// `t^i`. No trailing zero words are kept.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly {
    words: Vec<u64>,
}

impl F2Poly {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    pub fn t() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(e: usize) -> Self {
        let mut p = Self::zero();
        p.flip(e);
        p
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = usize>) -> Self {
        let mut p = Self::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    /// `1 + t + … + t^(n−1)`.
    pub fn all_ones(n: usize) -> Self {
        Self::from_exponents(0..n)
    }

    /// Parses a string of coefficient bits, lowest degree first (`"111"`).
    pub fn from_bits(bits: &str) -> Self {
        Self::from_exponents(bits.chars().enumerate().filter(|(_, c)| *c == '1').map(|(i, _)| i))
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn flip(&mut self, e: usize) {
        let (w, b) = (e / 64, e % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << b;
        self.trim();
    }

    pub fn bit(&self, e: usize) -> bool {
        self.words.get(e / 64).is_some_and(|w| (w >> (e % 64)) & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| i * 64 + b))
    }

    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        if other.is_zero() {
            return;
        }
        let (ws, bs) = (shift / 64, shift % 64);
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs > 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        self.trim();
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial over F2");
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            q.flip(rd - dd);
            r.xor_shifted(d, rd - dd);
        }
        (q, r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_zero()
    }

    /// Monic greatest common divisor (every nonzero polynomial over 𝔽₂ is
    /// monic); `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// `self^(2^k) mod m`, by repeated squaring.
    fn frobenius_mod(&self, k: usize, m: &Self) -> Self {
        let mut x = self.rem(m);
        for _ in 0..k {
            x = (&x * &x).rem(m);
        }
        x
    }

    /// Ben-Or irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        let t = Self::t();
        let mut x = t.clone();
        for _ in 1..=n / 2 {
            x = x.frobenius_mod(1, self);
            if !self.gcd(&(&x + &t)).is_one() {
                return false;
            }
        }
        true
    }

    /// Factorization into irreducibles with multiplicities, by trial
    /// division in increasing degree. Intended for the small degrees that
    /// occur as invariant factors here.
    pub fn factor(&self) -> Vec<(F2Poly, usize)> {
        let mut out = Vec::new();
        let mut f = self.clone();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let mut d = 1usize;
        while f.degree().unwrap_or(0) >= 2 * d {
            for mask in (1u64 << d)..(1u64 << (d + 1)) {
                let cand = Self { words: vec![mask] };
                if !cand.is_irreducible() {
                    continue;
                }
                let mut mult = 0;
                loop {
                    let (q, r) = f.divrem(&cand);
                    if !r.is_zero() {
                        break;
                    }
                    f = q;
                    mult += 1;
                }
                if mult > 0 {
                    out.push((cand, mult));
                }
            }
            d += 1;
            if d >= 63 {
                break;
            }
        }
        if f.degree().unwrap_or(0) > 0 {
            match out.iter_mut().find(|(g, _)| *g == f) {
                Some(slot) => slot.1 += 1,
                None => out.push((f, 1)),
            }
        }
        out.sort_by_key(|(g, _)| (g.degree(), g.words.clone()));
        out
    }

    /// Reduction of a Laurent polynomial with nonnegative exponents.
    pub fn from_laurent(f: &F2Laurent) -> Option<Self> {
        if f.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        Some(Self::from_exponents(f.terms().map(|(e, _)| e as usize)))
    }
}

impl Add for &F2Poly {
    type Output = F2Poly;
    fn add(self, rhs: &F2Poly) -> F2Poly {
        let mut out = self.clone();
        out.xor_shifted(rhs, 0);
        out
    }
}

impl Mul for &F2Poly {
    type Output = F2Poly;
    fn mul(self, rhs: &F2Poly) -> F2Poly {
        let mut out = F2Poly::zero();
        for e in self.exponents() {
            out.xor_shifted(rhs, e);
        }
        out
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let exps: Vec<usize> = self.exponents().collect();
        for (i, e) in exps.iter().rev().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly({self})")
    }
}
