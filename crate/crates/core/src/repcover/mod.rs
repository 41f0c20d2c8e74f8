//! The induced representation `Φ` on the knot group, built from the
//! `V_p`-valued arc labels and the character `χ`.

mod blocks;
mod companion;
mod monomial;
mod rep;
mod vp;

pub use blocks::{identity_suite, Blocks, IdentityCheck};
pub use companion::{CompanionPair, RepError};
pub use monomial::MonomialMatrix;
pub use rep::{build_phi_fox_matrix, build_wirtinger_phi_matrix, verify_rho_constraints, RepImage, RhoCheck};
pub use vp::{solve_rho, CharacterData, RhoSolution, Vp};
