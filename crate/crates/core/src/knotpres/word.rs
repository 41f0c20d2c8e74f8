use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactalg::IntPoly;

/// Dense generator id.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gen(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: Gen,
    /// `+1` or `-1`.
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: Gen, exp: i8) -> Self {
        assert!(exp == 1 || exp == -1, "letter exponent must be ±1");
        Self { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Self {
            gen: self.gen,
            exp: -self.exp,
        }
    }
}

/// Freely reduced word in a free group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord(Vec<Letter>);

impl GroupWord {
    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn gen(g: Gen) -> Self {
        Self(vec![Letter::new(g, 1)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Self::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Shorthand for tests and fixtures: `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        Self::from_letters(pairs.iter().map(|&(g, e)| Letter::new(Gen(g), e)))
    }

    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `base^k · self · base^{-k}`.
    pub fn conjugated_by(&self, base: &GroupWord, k: i64) -> Self {
        let b = base.pow(k);
        &(&b * self) * &b.inverse()
    }

    /// Exponent sum: the image under abelianization when every generator is
    /// a meridian.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|l| i64::from(l.exp)).sum()
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.0.iter().any(|l| l.gen == g)
    }

    /// Renames generators letter by letter.
    pub fn map_gens(&self, f: impl Fn(Gen) -> Gen) -> Self {
        Self::from_letters(self.0.iter().map(|l| Letter::new(f(l.gen), l.exp)))
    }

    /// Substitutes a word for each generator.
    pub fn substitute(&self, f: impl Fn(Gen) -> GroupWord) -> Self {
        let mut out = Self::identity();
        for l in &self.0 {
            let w = f(l.gen);
            let w = if l.exp == 1 { w } else { w.inverse() };
            out = &out * &w;
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|l| {
                let n = &names[l.gen.0];
                if l.exp == 1 {
                    n.clone()
                } else {
                    format!("{n}^-1")
                }
            })
            .collect();
        parts.join(" ")
    }
}

impl Mul for &GroupWord {
    type Output = GroupWord;
    fn mul(self, rhs: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        for &l in &rhs.0 {
            out.push(l);
        }
        out
    }
}

impl fmt::Debug for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}", l.gen.0)?;
            if l.exp == -1 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Element of the integral group ring of a free group.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GroupRingElem {
    terms: BTreeMap<GroupWord, i64>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(GroupWord::identity())
    }

    pub fn word(w: GroupWord) -> Self {
        let mut e = Self::zero();
        e.add_term(w, 1);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (GroupWord, i64)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: GroupWord, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &GroupWord) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn left_mul(&self, w: &GroupWord) -> Self {
        Self::from_terms(self.terms().map(|(u, c)| (w * u, c)))
    }

    pub fn right_mul(&self, w: &GroupWord) -> Self {
        Self::from_terms(self.terms().map(|(u, c)| (u * w, c)))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_terms(self.terms().map(|(u, c)| (u.clone(), c * k)))
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Image in `ℤ[t^{±1}]` when every generator maps to `t`.
    pub fn abelianize(&self) -> IntPoly {
        let mut out = IntPoly::zero();
        for (w, c) in self.terms() {
            out.add_term(w.weight(), &num_bigint::BigInt::from(c));
        }
        out
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
            let (neg, mag) = (c < 0, c.unsigned_abs());
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let body = w.render(names);
            match (mag, w.is_empty()) {
                (1, _) => s.push_str(&body),
                (_, true) => s.push_str(&mag.to_string()),
                _ => s.push_str(&format!("{mag}·{body}")),
            }
        }
        s
    }
}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms().map(|(w, c)| format!("{c}·[{w:?}]")).collect();
        write!(
            f,
            "{}",
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        )
    }
}

impl Add for &GroupRingElem {
    type Output = GroupRingElem;
    fn add(self, rhs: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &GroupRingElem {
    type Output = GroupRingElem;
    fn sub(self, rhs: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &GroupRingElem {
    type Output = GroupRingElem;
    fn neg(self) -> GroupRingElem {
        self.scale(-1)
    }
}

impl Mul for &GroupRingElem {
    type Output = GroupRingElem;
    fn mul(self, rhs: &GroupRingElem) -> GroupRingElem {
        let mut out = GroupRingElem::zero();
        for (u, a) in self.terms() {
            for (v, b) in rhs.terms() {
                out.add_term(u * v, a * b);
            }
        }
        out
    }
}

/// Free derivative `∂w/∂g`.
pub fn fox_derivative(w: &GroupWord, g: Gen) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let mut prefix = GroupWord::identity();
    for &l in w.letters() {
        if l.exp == 1 {
            if l.gen == g {
                out.add_term(prefix.clone(), 1);
            }
            prefix.push(l);
        } else {
            prefix.push(l);
            if l.gen == g {
                out.add_term(prefix.clone(), -1);
            }
        }
    }
    out
}
