//! Eight-generator presentation on the arcs at the passage boundaries.

use serde::Serialize;

use super::presentation::{validate_params, KnotParamError, Presentation, Relation, Sign};
use super::word::{Gen, GroupWord};

/// Arcs where the strand enters or leaves a twist band. Declaration order
/// is the generator order of the reduced presentation, so dropping `e`
/// leaves the columns `a, b, c, α, η, β, γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum BoundaryArc {
    A,
    B,
    C,
    E,
    Alpha,
    Eta,
    Beta,
    Gamma,
}

impl BoundaryArc {
    pub const ALL: [BoundaryArc; 8] = [
        BoundaryArc::A,
        BoundaryArc::B,
        BoundaryArc::C,
        BoundaryArc::E,
        BoundaryArc::Alpha,
        BoundaryArc::Eta,
        BoundaryArc::Beta,
        BoundaryArc::Gamma,
    ];

    pub fn gen(self) -> Gen {
        Gen(self as usize)
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundaryArc::A => "a",
            BoundaryArc::B => "b",
            BoundaryArc::C => "c",
            BoundaryArc::E => "e",
            BoundaryArc::Alpha => "α",
            BoundaryArc::Eta => "η",
            BoundaryArc::Beta => "β",
            BoundaryArc::Gamma => "γ",
        }
    }

    /// Arcs whose representation image is the first companion matrix.
    pub fn maps_to_x(self) -> bool {
        matches!(
            self,
            BoundaryArc::A | BoundaryArc::E | BoundaryArc::Alpha | BoundaryArc::Eta
        )
    }
}

fn g(b: BoundaryArc) -> GroupWord {
    GroupWord::gen(b.gen())
}

fn pair(x: BoundaryArc, y: BoundaryArc) -> GroupWord {
    &g(x) * &g(y)
}

/// All eight boundary relations, the last (for `α`) being a consequence of
/// the others.
pub fn reduced_relations(n: i64, m: i64, sign: Sign) -> Result<Vec<Relation>, KnotParamError> {
    use BoundaryArc::*;
    validate_params(n, m)?;
    let k = (m - 1) / 2;
    let n3 = match sign {
        Sign::Plus => n,
        Sign::Minus => n - 1,
    };
    let ea = pair(Eta, Alpha);
    let bg = pair(Beta, Gamma);
    let ec = pair(E, C);
    let ba = pair(B, A);
    Ok(vec![
        Relation::new(A.gen(), ea.clone(), n, g(Alpha)),
        Relation::new(E.gen(), ea, n, g(Eta)),
        Relation::new(B.gen(), bg.clone(), -n3, g(Gamma)),
        Relation::new(C.gen(), bg, -(n3 + 1), g(Beta)),
        Relation::new(Gamma.gen(), ec.clone(), k, g(E)),
        Relation::new(Eta.gen(), ec, k + 1, g(C)),
        Relation::new(Beta.gen(), ba.clone(), -k, g(A)),
        Relation::new(Alpha.gen(), ba, -(k + 1), g(B)),
    ])
}

/// Deficiency-one presentation with `e` as preferred meridian.
pub fn reduced_presentation(n: i64, m: i64, sign: Sign) -> Result<Presentation, KnotParamError> {
    let mut rels = reduced_relations(n, m, sign)?;
    rels.truncate(7);
    let names = BoundaryArc::ALL.iter().map(|b| b.name().to_string()).collect();
    Ok(Presentation::new(names, rels, BoundaryArc::E.gen()))
}
