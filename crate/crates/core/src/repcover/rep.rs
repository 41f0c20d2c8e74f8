use num_bigint::BigInt;
use rayon::prelude::*;

use crate::knotpres::{
    pretzel_diagram, reduced_presentation, BoundaryArc, FoxMatrix, Gen, GroupRingElem, GroupWord, Presentation, Sign,
};
use crate::polymat::IntMatrix;

use super::companion::{companion_x, CompanionPair, RepError};
use super::monomial::MonomialMatrix;
use super::vp::{solve_rho, CharacterData, RhoSolution};

/// Images of the generators under `Φ`, each a signed monomial matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepImage {
    p: usize,
    images: Vec<MonomialMatrix>,
    inverses: Vec<MonomialMatrix>,
}

impl RepImage {
    pub fn new(p: usize, images: Vec<MonomialMatrix>) -> Self {
        let inverses = images.iter().map(MonomialMatrix::inverse).collect();
        Self { p, images, inverses }
    }

    /// `Φ(g) = x · D(v_g)` for a `V_p` value per generator.
    pub fn from_values(chars: &CharacterData, values: &[crate::exactalg::F2Poly]) -> Self {
        let x = companion_x(chars.p());
        Self::new(
            chars.p(),
            values.iter().map(|v| x.mul(&chars.sign_diagonal(v))).collect(),
        )
    }

    /// Reduced-presentation assignment: `a, e, α, η ↦ x`, and
    /// `b, c, β, γ ↦ x·D(seed)`, which is `y` for the standard character.
    pub fn for_reduced(chars: &CharacterData) -> Self {
        let zero = crate::exactalg::F2Poly::zero();
        let values: Vec<_> = BoundaryArc::ALL
            .iter()
            .map(|b| {
                if b.maps_to_x() {
                    zero.clone()
                } else {
                    chars.seed().clone()
                }
            })
            .collect();
        Self::from_values(chars, &values)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn image(&self, g: Gen) -> Result<&MonomialMatrix, RepError> {
        self.images.get(g.0).ok_or(RepError::Unassigned(g.0))
    }

    pub fn word_image(&self, w: &GroupWord) -> Result<MonomialMatrix, RepError> {
        let mut acc = MonomialMatrix::identity(self.p);
        for l in w.letters() {
            let table = if l.exp == 1 { &self.images } else { &self.inverses };
            let m = table.get(l.gen.0).ok_or(RepError::Unassigned(l.gen.0))?;
            acc = acc.mul(m);
        }
        Ok(acc)
    }

    /// Linear extension to the group ring.
    pub fn apply(&self, e: &GroupRingElem) -> Result<IntMatrix, RepError> {
        let mut acc = IntMatrix::zeros(self.p, self.p);
        for (w, c) in e.terms() {
            self.word_image(w)?.add_into(&mut acc, &BigInt::from(c));
        }
        Ok(acc)
    }

    /// Every relator must map to the identity.
    pub fn check_relators(&self, pres: &Presentation) -> Result<(), RepError> {
        for (index, r) in pres.relators().iter().enumerate() {
            if !self.word_image(r)?.is_identity() {
                return Err(RepError::NotAHomomorphism { index });
            }
        }
        Ok(())
    }

    /// Block matrix `[Φ(entry)]`.
    pub fn apply_fox(&self, fox: &FoxMatrix) -> Result<IntMatrix, RepError> {
        let blocks: Vec<Vec<IntMatrix>> = fox
            .entries
            .par_iter()
            .map(|row| row.iter().map(|e| self.apply(e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        Ok(IntMatrix::block(&blocks).expect("all blocks are p×p"))
    }
}

fn check_divides(p: usize, m: i64) -> Result<(), RepError> {
    if m % p as i64 != 0 {
        return Err(RepError::PDoesNotDivideM { p: p as u64, m });
    }
    Ok(())
}

/// `Φ` applied to the Fox matrix of the reduced presentation with the `e`
/// column removed: a `7p × 7p` Laurent matrix.
pub fn build_phi_fox_matrix(n: i64, m: i64, sign: Sign, chars: &CharacterData) -> Result<IntMatrix, RepError> {
    CompanionPair::new(chars.p() as u64)?;
    check_divides(chars.p(), m)?;
    let pres = reduced_presentation(n, m, sign)?;
    let rep = RepImage::for_reduced(chars);
    rep.check_relators(&pres)?;
    let fox = pres.fox_matrix(pres.meridian())?;
    rep.apply_fox(&fox)
}

/// The same construction on the full Wirtinger presentation, with the
/// arc values solved from the `V_p` system and the first relator dropped.
pub fn build_wirtinger_phi_matrix(
    n: i64,
    m: i64,
    sign: Sign,
    chars: &CharacterData,
) -> Result<(IntMatrix, RhoSolution), RepError> {
    CompanionPair::new(chars.p() as u64)?;
    check_divides(chars.p(), m)?;
    let diagram = pretzel_diagram(n, m, sign)?;
    let pres = &diagram.presentation;
    let sol = solve_rho(pres, diagram.boundary[&BoundaryArc::Gamma], chars)?;
    let rep = RepImage::from_values(chars, &sol.values);
    rep.check_relators(pres)?;
    let fox = pres.fox_matrix(pres.meridian())?.without_row(0)?;
    Ok((rep.apply_fox(&fox)?, sol))
}

/// Outcome of solving for `ρ̃` on the Wirtinger arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoCheck {
    pub solution: RhoSolution,
    /// Zero on `a, e, α, η` and equal to the seed on `b, c, β, γ`.
    pub boundary_pattern: bool,
    /// The seed determines the solution.
    pub unique: bool,
}

impl RhoCheck {
    pub fn passed(&self) -> bool {
        self.boundary_pattern && self.unique
    }
}

pub fn verify_rho_constraints(n: i64, m: i64, sign: Sign, chars: &CharacterData) -> Result<RhoCheck, RepError> {
    check_divides(chars.p(), m)?;
    let diagram = pretzel_diagram(n, m, sign)?;
    let sol = solve_rho(&diagram.presentation, diagram.boundary[&BoundaryArc::Gamma], chars)?;
    let zero = crate::exactalg::F2Poly::zero();
    let boundary_pattern = diagram.boundary.iter().all(|(b, g)| {
        let want = if b.maps_to_x() { &zero } else { chars.seed() };
        &sol.values[g.0] == want
    });
    let unique = sol.free_dimension == chars.vp().dim();
    Ok(RhoCheck {
        solution: sol,
        boundary_pattern,
        unique,
    })
}
