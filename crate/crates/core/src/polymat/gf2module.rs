//! Finitely presented torsion modules over 𝔽₂[t]: diagonalization by
//! Euclid-driven row and column moves.

use std::fmt;

use serde::Serialize;

use crate::exactalg::F2Poly;

/// Dense matrix over 𝔽₂[t]. Rows are relations, columns generators.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<F2Poly>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![F2Poly::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<F2Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F2Poly::one());
        }
        m
    }

    pub fn diagonal(d: &[F2Poly]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, p) in d.iter().enumerate() {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F2Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F2Poly) {
        self.entries[i * self.cols + j] = v;
    }

    /// Appends `q · e_j` as a relation for every generator `j`.
    pub fn with_relation_on_all(&self, q: &F2Poly) -> Self {
        let mut out = Self::zeros(self.rows + self.cols, self.cols);
        out.entries[..self.entries.len()].clone_from_slice(&self.entries);
        for j in 0..self.cols {
            out.set(self.rows + j, j, q.clone());
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += f · row[src]`.
    fn add_row_multiple(&mut self, src: usize, dst: usize, f: &F2Poly) {
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(dst, j) + &(f * s);
            self.set(dst, j, v);
        }
    }

    fn add_col_multiple(&mut self, src: usize, dst: usize, f: &F2Poly) {
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s.is_zero() {
                continue;
            }
            let v = self.get(i, dst) + &(f * s);
            self.set(i, dst, v);
        }
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// One elementary move of the reduction, recorded for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionMove {
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    /// `row[dst] += factor · row[src]`
    AddRow {
        src: usize,
        dst: usize,
        factor: F2Poly,
    },
    /// `col[dst] += factor · col[src]`
    AddCol {
        src: usize,
        dst: usize,
        factor: F2Poly,
    },
}

/// Isomorphism type of a finitely generated 𝔽₂[t]-module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleStructure {
    /// Non-unit invariant factors `d_1 | d_2 | …`, lowest first.
    #[serde(serialize_with = "ser_polys")]
    pub invariant_factors: Vec<F2Poly>,
    /// Number of free 𝔽₂[t] summands.
    pub free_rank: usize,
    pub cyclic: bool,
    /// 𝔽₂-dimension; `None` when the module has a free part.
    pub f2_dimension: Option<usize>,
}

fn ser_polys<S: serde::Serializer>(v: &[F2Poly], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl ModuleStructure {
    /// Irreducible factors with multiplicities, over all invariant factors.
    pub fn elementary_divisors(&self) -> Vec<(F2Poly, usize)> {
        self.invariant_factors.iter().flat_map(F2Poly::factor).collect()
    }

    /// Simple module: `𝔽₂[t]/(q)` with `q` irreducible.
    pub fn is_simple(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.len() == 1 && self.invariant_factors[0].is_irreducible()
    }

    /// Cyclic with the single invariant factor `q`.
    pub fn is_cyclic_of(&self, q: &F2Poly) -> bool {
        self.free_rank == 0 && self.invariant_factors.len() == 1 && &self.invariant_factors[0] == q
    }
}

/// Diagonalizes `pres` (with `extra_rel · e_j` adjoined for every
/// generator when `extra_rel` is nonzero) and returns the module structure
/// together with the move log.
pub fn reduce_presentation(pres: &Gf2Matrix, extra_rel: &F2Poly) -> (ModuleStructure, Vec<ReductionMove>) {
    let mut a = if extra_rel.is_zero() {
        pres.clone()
    } else {
        pres.with_relation_on_all(extra_rel)
    };
    let mut moves = Vec::new();
    let (r, c) = (a.rows, a.cols);
    let mut diag = Vec::new();
    for k in 0..r.min(c) {
        while let Some((pi, pj)) = min_degree_entry(&a, k) {
            if pi != k {
                a.swap_rows(pi, k);
                moves.push(ReductionMove::SwapRows(pi, k));
            }
            if pj != k {
                a.swap_cols(pj, k);
                moves.push(ReductionMove::SwapCols(pj, k));
            }
            let pivot = a.get(k, k).clone();
            let mut clean = true;
            for i in k + 1..r {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let (q, rem) = a.get(i, k).divrem(&pivot);
                a.add_row_multiple(k, i, &q);
                moves.push(ReductionMove::AddRow {
                    src: k,
                    dst: i,
                    factor: q,
                });
                clean &= rem.is_zero();
            }
            for j in k + 1..c {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let (q, rem) = a.get(k, j).divrem(&pivot);
                a.add_col_multiple(k, j, &q);
                moves.push(ReductionMove::AddCol {
                    src: k,
                    dst: j,
                    factor: q,
                });
                clean &= rem.is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce the divisibility chain on the remaining block.
            let bad = (k + 1..r).find(|&i| (k + 1..c).any(|j| !pivot.divides(a.get(i, j))));
            match bad {
                Some(i) => {
                    a.add_row_multiple(i, k, &F2Poly::one());
                    moves.push(ReductionMove::AddRow {
                        src: i,
                        dst: k,
                        factor: F2Poly::one(),
                    });
                }
                None => break,
            }
        }
        diag.push(a.get(k, k).clone());
    }
    let nonzero: Vec<F2Poly> = diag.into_iter().filter(|d| !d.is_zero()).collect();
    let free_rank = c - nonzero.len();
    let invariant_factors: Vec<F2Poly> = nonzero.into_iter().filter(|d| !d.is_one()).collect();
    let f2_dimension = (free_rank == 0).then(|| invariant_factors.iter().map(|d| d.degree().unwrap_or(0)).sum());
    let structure = ModuleStructure {
        cyclic: invariant_factors.len() + free_rank <= 1,
        invariant_factors,
        free_rank,
        f2_dimension,
    };
    (structure, moves)
}

fn min_degree_entry(a: &Gf2Matrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in k..a.rows {
        for j in k..a.cols {
            if let Some(d) = a.get(i, j).degree() {
                if best.is_none_or(|b| d < b.2) {
                    best = Some((i, j, d));
                    if d == 0 {
                        return Some((i, j));
                    }
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Module presented by `pres` with `extra_rel` imposed on every generator.
pub fn gf2t_module_reduce(pres: &Gf2Matrix, extra_rel: &F2Poly) -> ModuleStructure {
    reduce_presentation(pres, extra_rel).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_presents_zero_module() {
        let s = gf2t_module_reduce(&Gf2Matrix::identity(3), &F2Poly::zero());
        assert!(s.invariant_factors.is_empty());
        assert_eq!(s.f2_dimension, Some(0));
        assert!(s.cyclic);
    }

    #[test]
    fn diagonal_square_of_irreducible_is_not_cyclic() {
        let q = F2Poly::all_ones(3);
        let s = gf2t_module_reduce(&Gf2Matrix::diagonal(&[q.clone(), q.clone()]), &F2Poly::zero());
        assert_eq!(s.invariant_factors, vec![q.clone(), q]);
        assert!(!s.cyclic);
        assert_eq!(s.f2_dimension, Some(4));
    }

    #[test]
    fn coprime_diagonal_is_cyclic() {
        let a = F2Poly::from_bits("11");
        let b = F2Poly::all_ones(3);
        let s = gf2t_module_reduce(&Gf2Matrix::diagonal(&[a.clone(), b.clone()]), &F2Poly::zero());
        assert_eq!(s.invariant_factors, vec![&a * &b]);
        assert!(s.cyclic);
    }

    #[test]
    fn free_part_is_reported() {
        let s = gf2t_module_reduce(&Gf2Matrix::zeros(1, 2), &F2Poly::zero());
        assert_eq!(s.free_rank, 2);
        assert_eq!(s.f2_dimension, None);
        assert!(!s.cyclic);
    }

    #[test]
    fn moves_are_recorded() {
        let m = Gf2Matrix::from_rows(vec![vec![F2Poly::from_bits("011"), F2Poly::from_bits("11")]]);
        let (s, moves) = reduce_presentation(&m, &F2Poly::all_ones(3));
        assert!(!moves.is_empty());
        assert!(s.cyclic);
    }
}
