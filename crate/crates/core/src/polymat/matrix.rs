use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde_json::Value;

use crate::exactalg::{int_poly_to_json, Coeff, LaurentPoly};

use super::MatrixError;

/// Dense matrix of Laurent polynomials, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix<C> {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly<C>>,
}

pub type IntMatrix = PolyMatrix<BigInt>;

impl<C: Coeff> PolyMatrix<C> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, LaurentPoly::one())
    }

    /// `s · I_n`.
    pub fn scalar(n: usize, s: LaurentPoly<C>) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, s.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> LaurentPoly<C>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly<C>>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(MatrixError::Ragged);
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix with constant integer entries.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| LaurentPoly::constant(C::from_i64(v))).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly<C> {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut LaurentPoly<C> {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly<C>) {
        *self.get_mut(i, j) = v;
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly<C>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &LaurentPoly<C>> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LaurentPoly::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly<C>) -> LaurentPoly<C>) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> PolyMatrix<D> {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|p| p.map_coeffs(&f)).collect(),
        }
    }

    pub fn scale(&self, s: &LaurentPoly<C>) -> Self {
        self.map(|p| p * s)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.check_same(rhs, "add")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.check_same(rhs, "sub")?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let prod = a * b;
                        out.get_mut(i, j).add_assign_ref(&prod);
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_same(&self, rhs: &Self, op: &'static str) -> Result<(), MatrixError> {
        if self.shape() != rhs.shape() {
            return Err(MatrixError::DimensionMismatch {
                op,
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square(), "pow of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
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

    /// `Σ_{i=lo}^{hi} M^i`.
    pub fn power_sum(&self, lo: u32, hi: u32) -> Self {
        let mut acc = Self::zeros(self.rows, self.cols);
        if lo > hi {
            return acc;
        }
        let mut term = self.pow(lo);
        for i in lo..=hi {
            acc = &acc + &term;
            if i < hi {
                term = &term * self;
            }
        }
        acc
    }

    /// Assembles a block matrix; every block in a block row shares its row
    /// count and every block in a block column its column count.
    pub fn block(grid: &[Vec<Self>]) -> Result<Self, MatrixError> {
        let Some(first) = grid.first() else {
            return Ok(Self::zeros(0, 0));
        };
        let col_widths: Vec<usize> = first.iter().map(Self::cols).collect();
        let mut rows = Vec::new();
        for brow in grid {
            if brow.len() != col_widths.len() {
                return Err(MatrixError::Ragged);
            }
            let h = brow[0].rows;
            for (b, &w) in brow.iter().zip(&col_widths) {
                if b.rows != h || b.cols != w {
                    return Err(MatrixError::Ragged);
                }
            }
            for i in 0..h {
                rows.push(brow.iter().flat_map(|b| b.row(i).iter().cloned()).collect());
            }
        }
        Self::from_rows(rows)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Matrix with row `i` and column `j` removed.
    pub fn minor(&self, i: usize, j: usize) -> Self {
        let rs: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cs: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rs, &cs)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `(min, max)` exponent over the nonzero entries of row `i`.
    pub fn row_exponent_range(&self, i: usize) -> Option<(i64, i64)> {
        exponent_range(self.row(i).iter())
    }

    pub fn col_exponent_range(&self, j: usize) -> Option<(i64, i64)> {
        exponent_range((0..self.rows).map(|i| self.get(i, j)))
    }
}

fn exponent_range<'a, C: Coeff>(it: impl Iterator<Item = &'a LaurentPoly<C>>) -> Option<(i64, i64)> {
    it.filter_map(|p| Some((p.min_exp()?, p.max_exp()?)))
        .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
}

impl IntMatrix {
    /// JSON grid of polynomial objects, for debugging dumps.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(int_poly_to_json).collect()))
                .collect(),
        )
    }
}

impl<C: Coeff> Add for &PolyMatrix<C> {
    type Output = PolyMatrix<C>;
    fn add(self, rhs: &PolyMatrix<C>) -> PolyMatrix<C> {
        self.try_add(rhs).expect("matrix add")
    }
}

impl<C: Coeff> Sub for &PolyMatrix<C> {
    type Output = PolyMatrix<C>;
    fn sub(self, rhs: &PolyMatrix<C>) -> PolyMatrix<C> {
        self.try_sub(rhs).expect("matrix sub")
    }
}

impl<C: Coeff> Mul for &PolyMatrix<C> {
    type Output = PolyMatrix<C>;
    fn mul(self, rhs: &PolyMatrix<C>) -> PolyMatrix<C> {
        self.try_mul(rhs).expect("matrix mul")
    }
}

impl<C: Coeff> Neg for &PolyMatrix<C> {
    type Output = PolyMatrix<C>;
    fn neg(self) -> PolyMatrix<C> {
        self.map(|p| -p)
    }
}

impl<C: Coeff> fmt::Debug for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::IntPoly;

    #[test]
    fn identity_is_neutral() {
        let m = IntMatrix::from_fn(3, 3, |i, j| IntPoly::from_i64s(i as i64 - 1, &[j as i64 + 1, -1]));
        assert_eq!(&IntMatrix::identity(3) * &m, m);
        assert_eq!(&m * &IntMatrix::identity(3), m);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = IntMatrix::zeros(2, 3);
        assert!(matches!(a.try_mul(&a), Err(MatrixError::DimensionMismatch { .. })));
    }

    #[test]
    fn block_assembly() {
        let i2 = IntMatrix::identity(2);
        let z = IntMatrix::zeros(2, 1);
        let one = IntMatrix::identity(1);
        let z2 = IntMatrix::zeros(1, 2);
        let b = IntMatrix::block(&[vec![i2.clone(), z], vec![z2, one]]).unwrap();
        assert_eq!(b, IntMatrix::identity(3));
        assert!(IntMatrix::block(&[vec![i2.clone()], vec![IntMatrix::zeros(1, 3)]]).is_err());
    }

    #[test]
    fn power_sums() {
        let x = IntMatrix::scalar(1, IntPoly::t());
        let s = x.power_sum(0, 3);
        assert_eq!(s.get(0, 0), &IntPoly::from_i64s(0, &[1, 1, 1, 1]));
        assert!(x.power_sum(2, 1).is_zero());
    }
}
