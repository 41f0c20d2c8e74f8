//! Determinants of Laurent-polynomial matrices.
//!
//! Three independent routes: memoized Laplace expansion (the oracle),
//! fraction-free elimination over the polynomial ring, and evaluation at
//! integer points followed by interpolation.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exactalg::{unit_equiv, IntPoly, LaurentPoly};

use super::matrix::{IntMatrix, PolyMatrix};
use super::MatrixError;

/// Extra sample points used to confirm an interpolated determinant.
pub const EXTRA_POINTS: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum DetStrategy {
    Cofactor,
    Bareiss,
    /// Evaluate at integers and interpolate. With no explicit points the
    /// samples are `2, 3, 4, …`.
    #[default]
    EvalInterp,
    EvalInterpAt(Vec<i64>),
}

impl DetStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Cofactor => "cofactor",
            Self::Bareiss => "bareiss",
            Self::EvalInterp | Self::EvalInterpAt(_) => "eval-interp",
        }
    }
}

impl std::str::FromStr for DetStrategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cofactor" => Ok(Self::Cofactor),
            "bareiss" => Ok(Self::Bareiss),
            "eval-interp" => Ok(Self::EvalInterp),
            other => Err(format!(
                "unknown determinant strategy {other:?} (expected cofactor, bareiss or eval-interp)"
            )),
        }
    }
}

fn require_square<C: crate::exactalg::Coeff>(m: &PolyMatrix<C>) -> Result<usize, MatrixError> {
    if m.is_square() {
        Ok(m.rows())
    } else {
        Err(MatrixError::NotSquare(m.rows(), m.cols()))
    }
}

impl<C: crate::exactalg::Coeff> PolyMatrix<C> {
    /// Laplace expansion along rows, memoized on the set of used columns.
    /// Exponential in the worst case, but sparse block matrices keep the
    /// number of live column sets small.
    pub fn det_cofactor(&self) -> Result<LaurentPoly<C>, MatrixError> {
        let n = require_square(self)?;
        if n > 64 {
            return Err(MatrixError::TooLarge(n));
        }
        let mut layer: HashMap<u64, LaurentPoly<C>> = HashMap::new();
        layer.insert(0, LaurentPoly::one());
        for i in 0..n {
            let mut next: HashMap<u64, LaurentPoly<C>> = HashMap::with_capacity(layer.len());
            for (&used, acc) in &layer {
                for j in 0..n {
                    let bit = 1u64 << j;
                    let a = self.get(i, j);
                    if used & bit != 0 || a.is_zero() {
                        continue;
                    }
                    let above = (used >> j).count_ones();
                    let mut term = acc * a;
                    if above % 2 == 1 {
                        term = -term;
                    }
                    next.entry(used | bit)
                        .or_insert_with(LaurentPoly::zero)
                        .add_assign_ref(&term);
                }
            }
            next.retain(|_, v| !v.is_zero());
            if next.is_empty() {
                return Ok(LaurentPoly::zero());
            }
            layer = next;
        }
        Ok(layer.into_values().next().unwrap_or_default())
    }

    /// Fraction-free (Bareiss) elimination with exact polynomial division.
    pub fn det_bareiss(&self) -> Result<LaurentPoly<C>, MatrixError> {
        let n = require_square(self)?;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut a = self.clone();
        let mut prev = LaurentPoly::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero()),
                }
            }
            let pivot = a.get(k, k).clone();
            for i in k + 1..n {
                let aik = a.get(i, k).clone();
                for j in k + 1..n {
                    let mut v = &pivot * a.get(i, j);
                    if !aik.is_zero() {
                        v.sub_assign_ref(&(&aik * a.get(k, j)));
                    }
                    let q = v.div_exact(&prev).map_err(|_| MatrixError::InexactElimination)?;
                    a.set(i, j, q);
                }
                a.set(i, k, LaurentPoly::zero());
            }
            prev = pivot;
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if negate { -d } else { d })
    }
}

impl<C: crate::exactalg::Coeff> PolyMatrix<C> {
    /// Transposed cofactor matrix, so that `M · adj(M) = det(M) · I`.
    pub fn adjugate(&self) -> Result<Self, MatrixError> {
        let n = require_square(self)?;
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let mut c = self.minor(i, j).det_bareiss()?;
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                out.set(j, i, c);
            }
        }
        Ok(out)
    }
}

/// Fraction-free determinant of an integer matrix.
pub fn int_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let aik = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut v = pivot * &row[j];
                if !aik.is_zero() && !pivot_row[j].is_zero() {
                    v -= &aik * &pivot_row[j];
                }
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Row or column normalization chosen for the interpolation degree bound.
struct Shifted {
    matrix: IntMatrix,
    shift: i64,
    degree_bound: usize,
}

/// Multiplies each row (or column) by a power of `t` so that all entries
/// are ordinary polynomials; the determinant picks up the total shift.
fn normalize_for_interpolation(m: &IntMatrix) -> Option<Shifted> {
    let n = m.rows();
    let rows: Option<Vec<(i64, i64)>> = (0..n).map(|i| m.row_exponent_range(i)).collect();
    let cols: Option<Vec<(i64, i64)>> = (0..n).map(|j| m.col_exponent_range(j)).collect();
    let (rows, cols) = (rows?, cols?);
    let span = |r: &[(i64, i64)]| r.iter().map(|(lo, hi)| hi - lo).sum::<i64>();
    let by_rows = span(&rows) <= span(&cols);
    let ranges = if by_rows { &rows } else { &cols };
    let shift: i64 = ranges.iter().map(|r| r.0).sum();
    let matrix = IntMatrix::from_fn(n, n, |i, j| {
        let lo = if by_rows { rows[i].0 } else { cols[j].0 };
        m.get(i, j).shift(-lo)
    });
    Some(Shifted {
        matrix,
        shift,
        degree_bound: span(ranges) as usize,
    })
}

fn eval_matrix(m: &IntMatrix, x: &BigInt) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|p| p.eval(x).expect("entries are ordinary polynomials after shifting"))
                .collect()
        })
        .collect()
}

/// Newton interpolation through `(xs[i], ys[i])`, returned in the monomial
/// basis.
pub fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = num / den;
        }
    }
    let mut coeffs = vec![BigRational::zero(); n.max(1)];
    for k in (0..n).rev() {
        // coeffs ← coeffs · (t − x_k) + dd[k]
        let xk = BigRational::from_integer(xs[k].clone());
        let mut next = vec![BigRational::zero(); coeffs.len()];
        for (d, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < next.len() {
                next[d + 1] += c;
            }
            next[d] -= c * &xk;
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

/// Determinant by evaluation at `D + 1 + EXTRA_POINTS` integers, with `D`
/// a proven degree bound; the last points check the interpolant.
pub fn det_eval_interp(m: &IntMatrix, points: Option<&[i64]>) -> Result<IntPoly, MatrixError> {
    let n = require_square(m)?;
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let Some(shifted) = normalize_for_interpolation(m) else {
        return Ok(IntPoly::zero());
    };
    let need = shifted.degree_bound + 1 + EXTRA_POINTS;
    let xs: Vec<BigInt> = match points {
        None => (0..need as i64).map(|i| BigInt::from(i + 2)).collect(),
        Some(p) => {
            let mut sorted = p.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != p.len() {
                return Err(MatrixError::DuplicatePoints);
            }
            if p.len() < need {
                return Err(MatrixError::TooFewPoints { need, got: p.len() });
            }
            p.iter().map(|&v| BigInt::from(v)).collect()
        }
    };
    let ys: Vec<BigInt> = xs
        .par_iter()
        .map(|x| int_det(eval_matrix(&shifted.matrix, x)))
        .collect();
    let fit = shifted.degree_bound + 1;
    let coeffs = interpolate(&xs[..fit], &ys[..fit]);
    if coeffs.iter().any(|c| !c.is_integer()) {
        return Err(MatrixError::NonIntegralInterpolant);
    }
    let poly = IntPoly::from_coeffs(0, coeffs.into_iter().map(|c| c.to_integer()));
    for (x, y) in xs.iter().zip(&ys).skip(fit) {
        if poly.eval(x).as_ref() != Some(y) {
            return Err(MatrixError::InterpolationMismatch { point: x.to_string() });
        }
    }
    Ok(poly.shift(shifted.shift))
}

impl IntMatrix {
    pub fn det(&self, strategy: &DetStrategy) -> Result<IntPoly, MatrixError> {
        match strategy {
            DetStrategy::Cofactor => self.det_cofactor(),
            DetStrategy::Bareiss => self.det_bareiss(),
            DetStrategy::EvalInterp => det_eval_interp(self, None),
            DetStrategy::EvalInterpAt(points) => det_eval_interp(self, Some(points)),
        }
    }

    /// Cofactor and eval-interp determinants agree up to units.
    pub fn det_equiv_check(&self) -> Result<bool, MatrixError> {
        let a = self.det_cofactor()?;
        let b = det_eval_interp(self, None)?;
        Ok(unit_equiv(&a, &b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(shift: i64, c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(shift, c)
    }

    fn sample() -> IntMatrix {
        IntMatrix::from_rows(vec![
            vec![ip(0, &[1, 2]), ip(-1, &[3]), ip(0, &[0, 0, 1])],
            vec![ip(0, &[-1]), ip(1, &[1, 1]), IntPoly::zero()],
            vec![ip(-2, &[1, 0, 1]), ip(0, &[2]), ip(0, &[5, -1])],
        ])
        .unwrap()
    }

    #[test]
    fn strategies_agree_on_a_small_laurent_matrix() {
        let m = sample();
        let a = m.det_cofactor().unwrap();
        assert_eq!(m.det_bareiss().unwrap(), a);
        assert_eq!(det_eval_interp(&m, None).unwrap(), a);
        assert!(m.det_equiv_check().unwrap());
    }

    #[test]
    fn identity_and_zero_row() {
        assert!(IntMatrix::identity(5).det(&DetStrategy::EvalInterp).unwrap().is_one());
        let mut m = sample();
        for j in 0..3 {
            m.set(1, j, IntPoly::zero());
        }
        for s in [DetStrategy::Cofactor, DetStrategy::Bareiss, DetStrategy::EvalInterp] {
            assert!(m.det(&s).unwrap().is_zero(), "{s:?}");
        }
    }

    #[test]
    fn explicit_points() {
        let m = sample();
        let pts: Vec<i64> = (-10..10).collect();
        assert_eq!(
            m.det(&DetStrategy::EvalInterpAt(pts)).unwrap(),
            m.det_cofactor().unwrap()
        );
        assert!(matches!(
            m.det(&DetStrategy::EvalInterpAt(vec![2, 3])),
            Err(MatrixError::TooFewPoints { .. })
        ));
        assert!(matches!(
            m.det(&DetStrategy::EvalInterpAt(vec![2; 20])),
            Err(MatrixError::DuplicatePoints)
        ));
    }

    #[test]
    fn non_square_rejected() {
        assert_eq!(IntMatrix::zeros(2, 3).det_cofactor(), Err(MatrixError::NotSquare(2, 3)));
    }

    #[test]
    fn adjugate_identity() {
        let m = sample();
        let d = m.det_cofactor().unwrap();
        assert_eq!(&m * &m.adjugate().unwrap(), IntMatrix::scalar(3, d));
    }

    #[test]
    fn integer_bareiss() {
        let a = vec![
            vec![BigInt::from(0), BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(3), BigInt::from(1), BigInt::from(4)],
            vec![BigInt::from(1), BigInt::from(5), BigInt::from(9)],
        ];
        // 0(9−20) − 2(27−4) + 1(15−1) = −32
        assert_eq!(int_det(a), BigInt::from(-32));
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        let xs: Vec<BigInt> = (2..6).map(BigInt::from).collect();
        let f = ip(0, &[7, -3, 0, 2]);
        let ys: Vec<BigInt> = xs.iter().map(|x| f.eval(x).unwrap()).collect();
        let c = interpolate(&xs, &ys);
        let back: Vec<BigInt> = c.into_iter().map(|c| c.to_integer()).collect();
        assert_eq!(IntPoly::from_coeffs(0, back), f);
    }
}
