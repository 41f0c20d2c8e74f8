use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::IntPoly;
use crate::polymat::{det_eval_interp, IntMatrix, MatrixError};

use super::word::{fox_derivative, Gen, GroupRingElem, GroupWord};

/// Which of the two pretzel families: `P(2n, m, −(2n+1), −m)` or
/// `P(2n, m, −(2n−1), −m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `±1`, the offset of the third band's crossing count from `2n`.
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

impl FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            other => Err(format!("sign must be plus or minus, got {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotParamError {
    #[error("n must be at least 1, got {0}")]
    NTooSmall(i64),
    #[error("m must be odd, got {0}")]
    MEven(i64),
    #[error("m must be at least 3, got {0}")]
    MTooSmall(i64),
}

/// Checks `n ≥ 1`, `m` odd, `m ≥ 3`.
pub fn validate_params(n: i64, m: i64) -> Result<(), KnotParamError> {
    if n < 1 {
        return Err(KnotParamError::NTooSmall(n));
    }
    if m % 2 == 0 {
        return Err(KnotParamError::MEven(m));
    }
    if m < 3 {
        return Err(KnotParamError::MTooSmall(m));
    }
    Ok(())
}

/// `target = base^power · inner · base^{-power}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub target: Gen,
    pub base: GroupWord,
    pub power: i64,
    pub inner: GroupWord,
}

impl Relation {
    pub fn new(target: Gen, base: GroupWord, power: i64, inner: GroupWord) -> Self {
        Self {
            target,
            base,
            power,
            inner,
        }
    }

    /// The right-hand side as a reduced word.
    pub fn rhs(&self) -> GroupWord {
        self.inner.conjugated_by(&self.base, self.power)
    }

    /// `rhs · target^{-1}`.
    pub fn relator(&self) -> GroupWord {
        &self.rhs() * &GroupWord::gen(self.target).inverse()
    }

    pub fn render(&self, names: &[String]) -> String {
        let target = &names[self.target.0];
        let inner = self.inner.render(names);
        if self.power == 0 || self.base.is_empty() {
            return format!("{target} = {inner}");
        }
        let base = if self.base.len() == 1 {
            self.base.render(names)
        } else {
            format!("({})", self.base.render(names).replace(' ', ""))
        };
        let pow = |k: i64| if k == 1 { base.clone() } else { format!("{base}^{k}") };
        format!("{target} = {} {inner} {}", pow(self.power), pow(-self.power))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("generator {0} is not part of the presentation")]
    UnknownGenerator(usize),
    #[error("relator index {index} out of range ({count} relators)")]
    NoSuchRelator { index: usize, count: usize },
    #[error("arc propagation did not reach every arc ({missing} left)")]
    Unreached { missing: usize },
    #[error("{0}")]
    Diagram(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Finite presentation whose relators are conjugation relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relations: Vec<Relation>,
    meridian: Gen,
}

impl Presentation {
    pub fn new(names: Vec<String>, relations: Vec<Relation>, meridian: Gen) -> Self {
        assert!(meridian.0 < names.len());
        Self {
            names,
            relations,
            meridian,
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> {
        (0..self.names.len()).map(Gen)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.0]
    }

    pub fn gen_named(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(Gen)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relators(&self) -> Vec<GroupWord> {
        self.relations.iter().map(Relation::relator).collect()
    }

    pub fn meridian(&self) -> Gen {
        self.meridian
    }

    pub fn deficiency(&self) -> i64 {
        self.names.len() as i64 - self.relations.len() as i64
    }

    /// One relation per line, in conjugation notation.
    pub fn to_text(&self) -> String {
        self.relations.iter().map(|r| r.render(&self.names) + "\n").collect()
    }

    /// Free derivatives of every relator with respect to every generator
    /// except `drop`.
    pub fn fox_matrix(&self, drop: Gen) -> Result<FoxMatrix, PresentationError> {
        if drop.0 >= self.names.len() {
            return Err(PresentationError::UnknownGenerator(drop.0));
        }
        let columns: Vec<Gen> = self.generators().filter(|&g| g != drop).collect();
        let entries = self
            .relators()
            .iter()
            .map(|r| columns.iter().map(|&g| fox_derivative(r, g)).collect())
            .collect();
        Ok(FoxMatrix { columns, entries })
    }

    /// `Σ_g (∂r/∂g)(g − 1) = r − 1` for every relator `r`.
    pub fn fundamental_identity_holds(&self) -> bool {
        self.relators().iter().all(|r| {
            let total = self.generators().fold(GroupRingElem::zero(), |acc, g| {
                let gm1 = &GroupRingElem::word(GroupWord::gen(g)) - &GroupRingElem::one();
                &acc + &(&fox_derivative(r, g) * &gm1)
            });
            total == &GroupRingElem::word(r.clone()) - &GroupRingElem::one()
        })
    }

    /// Classical Alexander polynomial from the abelianized Fox matrix with
    /// the meridian column removed. Surplus relators (beyond a square
    /// matrix) are dropped from the front.
    pub fn alexander_via_fox(&self) -> Result<IntPoly, PresentationError> {
        let mut fox = self.fox_matrix(self.meridian)?;
        while fox.row_count() > fox.columns.len() {
            fox = fox.without_row(0)?;
        }
        let m = fox.abelianize();
        Ok(det_eval_interp(&m, None)?)
    }
}

/// Matrix of group-ring elements; rows are relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoxMatrix {
    pub columns: Vec<Gen>,
    pub entries: Vec<Vec<GroupRingElem>>,
}

impl FoxMatrix {
    pub fn row_count(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: Gen) -> Option<&GroupRingElem> {
        let j = self.columns.iter().position(|&c| c == col)?;
        self.entries.get(row)?.get(j)
    }

    pub fn without_row(&self, index: usize) -> Result<Self, PresentationError> {
        if index >= self.entries.len() {
            return Err(PresentationError::NoSuchRelator {
                index,
                count: self.entries.len(),
            });
        }
        let mut out = self.clone();
        out.entries.remove(index);
        Ok(out)
    }

    /// Every generator sent to `t`.
    pub fn abelianize(&self) -> IntMatrix {
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(GroupRingElem::abelianize).collect())
            .collect();
        IntMatrix::from_rows(rows).expect("Fox rows have equal length")
    }
}
