//! Exact computation of twisted Alexander polynomial slice obstructions for
//! the pretzel knots `P(2n, m, −(2n±1), −m)`.
//!
//! The pipeline: build a presentation of the knot group ([`knotpres`]),
//! push its Fox matrix through the metabelian representation
//! ([`repcover`]), take an exact Laurent determinant ([`polymat`]), and run
//! the non-norm certificate ([`obstruct`]). [`homology`] supplies the
//! hypothesis checks and the mod-2 homology of the branched cover.

pub mod exactalg;
pub mod homology;
pub mod knotpres;
pub mod obstruct;
pub mod polymat;
pub mod repcover;
