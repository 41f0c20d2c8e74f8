//! `H₁(Σ_p; ℤ₂)` as an 𝔽₂[t]-module, computed two ways.

use serde::Serialize;

use crate::exactalg::F2Poly;
use crate::knotpres::Sign;
use crate::polymat::{gf2t_module_reduce, Gf2Matrix, ModuleStructure};

use super::seifert::seifert_matrix;
use super::spec::PretzelSpec;
use super::HomologyError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverHomology {
    pub structure: ModuleStructure,
    /// Cyclic with the single invariant factor `Σ_{i<p} t^i`.
    pub iso_to_vp: bool,
    /// `iso_to_vp` and `Σ_{i<p} t^i` irreducible over 𝔽₂.
    pub irreducible: bool,
}

/// `t·A − Aᵀ` reduced mod 2.
pub fn seifert_presentation_mod2(n: i64, m: i64, sign: Sign) -> Gf2Matrix {
    let a = seifert_matrix(n, m, sign);
    let size = a.size();
    let mut out = Gf2Matrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            let exps = [(a.get(j, i), 0), (a.get(i, j), 1)];
            out.set(
                i,
                j,
                F2Poly::from_exponents(exps.iter().filter(|(c, _)| c % 2 != 0).map(|&(_, e)| e)),
            );
        }
    }
    out
}

/// The 2×2 presentation `[[Σ_{i<m} t^i, c], [0, Σ_{i<m} t^i]]` of
/// `H₁(X_∞; ℤ₂)`, with `c = (Σ_{i≤2n} t^i)(Σ_{i<2n} t^i)`; the minus family
/// uses `(Σ_{i<2n} t^i)(Σ_{i≤2n−2} t^i)`.
pub fn explicit_presentation_mod2(n: i64, m: i64, sign: Sign) -> Gf2Matrix {
    let n2 = 2 * n as usize;
    let corner = match sign {
        Sign::Plus => &F2Poly::all_ones(n2 + 1) * &F2Poly::all_ones(n2),
        Sign::Minus => &F2Poly::all_ones(n2) * &F2Poly::all_ones(n2 - 1),
    };
    let sigma_m = F2Poly::all_ones(m as usize);
    Gf2Matrix::from_rows(vec![vec![sigma_m.clone(), corner], vec![F2Poly::zero(), sigma_m]])
}

/// Imposes `Σ_{i<p} t^i = 0` on both presentations, diagonalizes them and
/// insists they agree.
pub fn branched_cover_h1_mod2(spec: &PretzelSpec) -> Result<CoverHomology, HomologyError> {
    let sigma_p = F2Poly::all_ones(spec.p as usize);
    let seifert = gf2t_module_reduce(&seifert_presentation_mod2(spec.n, spec.m, spec.sign), &sigma_p);
    let explicit = gf2t_module_reduce(&explicit_presentation_mod2(spec.n, spec.m, spec.sign), &sigma_p);
    if seifert != explicit {
        return Err(HomologyError::RouteMismatch { seifert, explicit });
    }
    Ok(classify(seifert, &sigma_p))
}

fn classify(structure: ModuleStructure, sigma_p: &F2Poly) -> CoverHomology {
    let iso_to_vp = structure.is_cyclic_of(sigma_p);
    let irreducible = iso_to_vp && sigma_p.is_irreducible();
    CoverHomology {
        structure,
        iso_to_vp,
        irreducible,
    }
}
