//! Seifert matrices, the classical Alexander polynomial, mod-2 homology of
//! the `p`-fold branched cover, and the hypothesis flags.

mod cover;
mod seifert;
mod spec;

use thiserror::Error;

use crate::polymat::ModuleStructure;

pub use cover::{branched_cover_h1_mod2, explicit_presentation_mod2, seifert_presentation_mod2, CoverHomology};
pub use seifert::{alexander_polynomial, block_sizes, seifert_matrix, SeifertMatrix};
pub use spec::{default_prime, hypothesis_check, HypothesisReport, PretzelSpec, SpecError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("Seifert route gives {seifert:?} but the 2×2 presentation gives {explicit:?}")]
    RouteMismatch {
        seifert: ModuleStructure,
        explicit: ModuleStructure,
    },
}
