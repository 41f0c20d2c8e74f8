//! The module `V_p = 𝔽₂[t]/(1 + t + … + t^{p−1})`, the character on it, and
//! the linear system that assigns a `V_p` value to every Wirtinger arc.

use std::collections::BTreeSet;

use crate::exactalg::F2Poly;
use crate::knotpres::{Gen, Presentation};

use super::companion::RepError;
use super::monomial::MonomialMatrix;

/// Arithmetic in `V_p`. Elements are `F2Poly` of degree below `p − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vp {
    p: usize,
    modulus: F2Poly,
}

impl Vp {
    pub fn new(p: usize) -> Self {
        Self {
            p,
            modulus: F2Poly::all_ones(p),
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.p - 1
    }

    pub fn modulus(&self) -> &F2Poly {
        &self.modulus
    }

    pub fn reduce(&self, f: &F2Poly) -> F2Poly {
        f.rem(&self.modulus)
    }

    pub fn mul(&self, a: &F2Poly, b: &F2Poly) -> F2Poly {
        self.reduce(&(a * b))
    }

    /// `t^j · v`, with `j` taken mod `p`.
    pub fn mul_t_pow(&self, v: &F2Poly, j: i64) -> F2Poly {
        let j = j.rem_euclid(self.p as i64) as usize;
        self.mul(v, &F2Poly::monomial(j))
    }

    fn basis(&self, i: usize) -> F2Poly {
        F2Poly::monomial(i)
    }
}

/// `χ: V_p → 𝔽₂` given by the set of basis exponents where it is 1, together
/// with the seed value assigned to the anchor arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterData {
    vp: Vp,
    chi: BTreeSet<usize>,
    seed: F2Poly,
}

impl CharacterData {
    /// `χ(t⁰) = χ(t²) = 1`, zero on the other basis vectors, seed `1`.
    pub fn standard(p: usize) -> Self {
        let vp = Vp::new(p);
        let chi = [0, 2].into_iter().filter(|&i| i < vp.dim()).collect();
        Self {
            vp,
            chi,
            seed: F2Poly::one(),
        }
    }

    pub fn new(p: usize, chi: impl IntoIterator<Item = usize>, seed: F2Poly) -> Result<Self, RepError> {
        let vp = Vp::new(p);
        let chi: BTreeSet<usize> = chi.into_iter().collect();
        if let Some(&bad) = chi.iter().find(|&&i| i >= vp.dim()) {
            return Err(RepError::BadCharacter {
                limit: vp.dim(),
                got: bad,
            });
        }
        let seed = vp.reduce(&seed);
        Ok(Self { vp, chi, seed })
    }

    pub fn with_seed(&self, seed: F2Poly) -> Self {
        Self {
            seed: self.vp.reduce(&seed),
            ..self.clone()
        }
    }

    pub fn vp(&self) -> &Vp {
        &self.vp
    }

    pub fn p(&self) -> usize {
        self.vp.p
    }

    pub fn seed(&self) -> &F2Poly {
        &self.seed
    }

    pub fn chi_set(&self) -> &BTreeSet<usize> {
        &self.chi
    }

    pub fn chi(&self, v: &F2Poly) -> bool {
        self.chi.iter().fold(false, |acc, &i| acc ^ v.bit(i))
    }

    /// `diag((−1)^{χ(t^j v)})`, `j = 0, …, p−1`.
    pub fn sign_diagonal(&self, v: &F2Poly) -> MonomialMatrix {
        let signs = (0..self.vp.p)
            .map(|j| {
                if self.chi(&self.vp.mul_t_pow(v, j as i64)) {
                    -1
                } else {
                    1
                }
            })
            .collect();
        MonomialMatrix::signs(signs)
    }
}

/// Dense row over 𝔽₂ with a trailing right-hand-side bit.
#[derive(Clone, Debug)]
struct BitRow(Vec<u64>);

impl BitRow {
    fn zeros(bits: usize) -> Self {
        Self(vec![0; bits.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn flip(&mut self, i: usize) {
        self.0[i / 64] ^= 1 << (i % 64);
    }

    fn xor(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }

    fn first_set(&self, below: usize) -> Option<usize> {
        for (w, &word) in self.0.iter().enumerate() {
            if word != 0 {
                let i = w * 64 + word.trailing_zeros() as usize;
                return (i < below).then_some(i);
            }
        }
        None
    }
}

/// Solves `rows · x = rhs` over 𝔽₂ (the rhs bit sits at column `vars`).
/// Returns one solution and the nullity, or `None` if inconsistent.
fn solve_gf2(mut rows: Vec<BitRow>, vars: usize) -> Option<(Vec<bool>, usize)> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for i in 0..rows.len() {
        let Some(c) = rows[i].first_set(vars) else {
            if rows[i].get(vars) {
                return None;
            }
            continue;
        };
        let pivot = rows[i].clone();
        for (j, row) in rows.iter_mut().enumerate() {
            if j != i && row.get(c) {
                row.xor(&pivot);
            }
        }
        pivots.push((i, c));
        r += 1;
    }
    // Rows cleared after being visited may still carry an rhs bit.
    if rows.iter().any(|row| row.first_set(vars).is_none() && row.get(vars)) {
        return None;
    }
    let mut x = vec![false; vars];
    for &(i, c) in &pivots {
        x[c] = rows[i].get(vars);
    }
    Some((x, vars - r))
}

/// Values of `ρ̃` on every generator of a Wirtinger presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoSolution {
    pub values: Vec<F2Poly>,
    /// Dimension of the solution space with only the meridian pinned to 0.
    pub free_dimension: usize,
}

/// Solves `v_out = (1+t)v_over + t·v_in` (or its mirror for negative
/// crossings) over `V_p` for every relation, with `v_meridian = 0` and
/// `v_anchor = seed`.
pub fn solve_rho(pres: &Presentation, anchor: Gen, chars: &CharacterData) -> Result<RhoSolution, RepError> {
    let vp = chars.vp();
    let d = vp.dim();
    let n = pres.generator_count();
    let vars = n * d;
    let one_plus_t = F2Poly::all_ones(2);
    let t = F2Poly::t();

    let mut rows = Vec::new();
    for rel in pres.relations() {
        let over = single(&rel.base)?;
        let input = single(&rel.inner)?;
        let (lhs, rhs) = if rel.power == 1 {
            (rel.target, input)
        } else {
            (input, rel.target)
        };
        let terms = [(lhs, F2Poly::one()), (over, one_plus_t.clone()), (rhs, t.clone())];
        for out_bit in 0..d {
            let mut row = BitRow::zeros(vars + 1);
            for (g, mult) in &terms {
                for in_bit in 0..d {
                    if vp.mul(mult, &vp.basis(in_bit)).bit(out_bit) {
                        row.flip(g.0 * d + in_bit);
                    }
                }
            }
            rows.push(row);
        }
    }
    let pin = |rows: &mut Vec<BitRow>, g: Gen, value: &F2Poly| {
        for b in 0..d {
            let mut row = BitRow::zeros(vars + 1);
            row.flip(g.0 * d + b);
            if value.bit(b) {
                row.flip(vars);
            }
            rows.push(row);
        }
    };
    pin(&mut rows, pres.meridian(), &F2Poly::zero());
    let (_, free_dimension) = solve_gf2(rows.clone(), vars).ok_or(RepError::Inconsistent)?;
    pin(&mut rows, anchor, chars.seed());
    let (x, _) = solve_gf2(rows, vars).ok_or(RepError::Inconsistent)?;
    let values = (0..n)
        .map(|g| F2Poly::from_exponents((0..d).filter(|&b| x[g * d + b])))
        .collect();
    Ok(RhoSolution { values, free_dimension })
}

fn single(w: &crate::knotpres::GroupWord) -> Result<Gen, RepError> {
    match w.letters() {
        [l] if l.exp == 1 => Ok(l.gen),
        _ => Err(RepError::Presentation(crate::knotpres::PresentationError::Diagram(
            "ρ̃ solver needs Wirtinger relations (single-letter conjugators)".into(),
        ))),
    }
}
