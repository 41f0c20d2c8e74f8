//! The Seifert matrix of the four-band pretzel surface and the classical
//! Alexander polynomial it determines.

use crate::exactalg::{canonicalize, CanonicalPoly, IntPoly};
use crate::knotpres::Sign;
use crate::polymat::{det_eval_interp, IntMatrix, MatrixError};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    fn zeros(size: usize) -> Self {
        Self {
            size,
            entries: vec![0; size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.size + j]
    }

    fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.size + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.size)
    }

    /// Writes `s·B_len` at `(r0, c0)`, transposed if asked.
    fn put_bidiagonal(&mut self, r0: usize, c0: usize, len: usize, s: i64, transpose: bool) {
        for i in 0..len {
            self.set(r0 + i, c0 + i, s);
            if i + 1 < len {
                let (r, c) = if transpose { (i + 1, i) } else { (i, i + 1) };
                self.set(r0 + r, c0 + c, -s);
            }
        }
    }

    /// `t·A − Aᵀ`.
    pub fn alexander_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.size, self.size, |i, j| {
            IntPoly::from_i64s(0, &[-self.get(j, i), self.get(i, j)])
        })
    }

    /// `A − Aᵀ`, the intersection form; unimodular for a knot.
    pub fn intersection_form(&self) -> IntMatrix {
        IntMatrix::from_fn(self.size, self.size, |i, j| {
            IntPoly::from_int(self.get(i, j) - self.get(j, i))
        })
    }
}

/// Block sizes `(2n−1, m−1, 2n, m−1, 1)`; the third band has `2n−2` for the
/// minus family.
pub fn block_sizes(n: i64, m: i64, sign: Sign) -> [usize; 5] {
    let third = match sign {
        Sign::Plus => 2 * n,
        Sign::Minus => 2 * n - 2,
    };
    [
        (2 * n - 1) as usize,
        (m - 1) as usize,
        third as usize,
        (m - 1) as usize,
        1,
    ]
}

/// Block matrix
/// `[[−B, 0, 0, 0, 0], [0, −Bᵀ, 0, 0, −Uᵀ], [0, 0, Bᵀ, 0, Uᵀ], [0, 0, 0, B, 0], [−U, 0, 0, U, 0]]`
/// with `B_k` upper bidiagonal `(1, −1)` and `U_k = (1, 0, …, 0)`.
pub fn seifert_matrix(n: i64, m: i64, sign: Sign) -> SeifertMatrix {
    let sizes = block_sizes(n, m, sign);
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let mut a = SeifertMatrix::zeros(sizes.iter().sum());
    let last = offsets[4];
    a.put_bidiagonal(offsets[0], offsets[0], sizes[0], -1, false);
    a.put_bidiagonal(offsets[1], offsets[1], sizes[1], -1, true);
    a.put_bidiagonal(offsets[2], offsets[2], sizes[2], 1, true);
    a.put_bidiagonal(offsets[3], offsets[3], sizes[3], 1, false);
    // U blocks touch the first basis vector of their band.
    if sizes[1] > 0 {
        a.set(offsets[1], last, -1);
    }
    if sizes[2] > 0 {
        a.set(offsets[2], last, 1);
    }
    if sizes[0] > 0 {
        a.set(last, offsets[0], -1);
    }
    if sizes[3] > 0 {
        a.set(last, offsets[3], 1);
    }
    a
}

/// `det(t·A − Aᵀ)`, canonicalized.
pub fn alexander_polynomial(n: i64, m: i64, sign: Sign) -> Result<CanonicalPoly, MatrixError> {
    let d = det_eval_interp(&seifert_matrix(n, m, sign).alexander_matrix(), None)?;
    Ok(canonicalize(&d).expect("knot Alexander polynomial is nonzero"))
}
