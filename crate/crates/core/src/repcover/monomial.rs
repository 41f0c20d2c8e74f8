use num_bigint::BigInt;

use crate::exactalg::IntPoly;
use crate::polymat::IntMatrix;

/// `p×p` matrix with exactly one nonzero entry `±t^e` in each row and
/// column. Closed under products and inverses, which keeps the images of
/// long words cheap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    /// Row `i` has its entry in column `col[i]`.
    col: Vec<usize>,
    /// Entry of row `i` is `sign[i] · t^{exp[i]}`.
    sign: Vec<i8>,
    exp: Vec<i64>,
}

impl MonomialMatrix {
    pub fn identity(p: usize) -> Self {
        Self {
            col: (0..p).collect(),
            sign: vec![1; p],
            exp: vec![0; p],
        }
    }

    /// Panics unless `col` is a permutation and signs are `±1`.
    pub fn new(col: Vec<usize>, sign: Vec<i8>, exp: Vec<i64>) -> Self {
        let p = col.len();
        assert!(sign.len() == p && exp.len() == p);
        let mut seen = vec![false; p];
        for &c in &col {
            assert!(c < p && !seen[c], "not a permutation");
            seen[c] = true;
        }
        assert!(sign.iter().all(|&s| s == 1 || s == -1));
        Self { col, sign, exp }
    }

    /// Diagonal matrix of signs.
    pub fn signs(sign: Vec<i8>) -> Self {
        let p = sign.len();
        Self::new((0..p).collect(), sign, vec![0; p])
    }

    pub fn size(&self) -> usize {
        self.col.len()
    }

    /// `(column, sign, exponent)` of row `i`.
    pub fn entry(&self, i: usize) -> (usize, i8, i64) {
        (self.col[i], self.sign[i], self.exp[i])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.size();
        assert_eq!(p, rhs.size());
        let mut out = Self::identity(p);
        for i in 0..p {
            let j = self.col[i];
            out.col[i] = rhs.col[j];
            out.sign[i] = self.sign[i] * rhs.sign[j];
            out.exp[i] = self.exp[i] + rhs.exp[j];
        }
        out
    }

    pub fn inverse(&self) -> Self {
        let p = self.size();
        let mut out = Self::identity(p);
        for i in 0..p {
            let j = self.col[i];
            out.col[j] = i;
            out.sign[j] = self.sign[i];
            out.exp[j] = -self.exp[i];
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.size());
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Whether this is `t^e · I`.
    pub fn is_scalar(&self, e: i64) -> bool {
        (0..self.size()).all(|i| self.col[i] == i && self.sign[i] == 1 && self.exp[i] == e)
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar(0)
    }

    /// `acc += c · self`.
    pub fn add_into(&self, acc: &mut IntMatrix, c: &BigInt) {
        for i in 0..self.size() {
            let v = if self.sign[i] == 1 { c.clone() } else { -c };
            acc.get_mut(i, self.col[i]).add_term(self.exp[i], &v);
        }
    }

    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.size(), self.size());
        self.add_into(&mut m, &BigInt::from(1));
        m
    }

    /// Determinant `±t^{Σ exp}`.
    pub fn det(&self) -> IntPoly {
        let p = self.size();
        let mut visited = vec![false; p];
        let mut parity = 0usize;
        for s in 0..p {
            if visited[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !visited[i] {
                visited[i] = true;
                i = self.col[i];
                len += 1;
            }
            parity += len - 1;
        }
        let sign: i64 =
            self.sign.iter().map(|&s| i64::from(s)).product::<i64>() * if parity.is_multiple_of(2) { 1 } else { -1 };
        IntPoly::monomial(BigInt::from(sign), self.exp.iter().sum())
    }
}
