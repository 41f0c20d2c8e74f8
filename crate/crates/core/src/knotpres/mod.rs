//! Pretzel knot group presentations and free differential calculus.

mod presentation;
mod reduced;
mod wirtinger;
mod word;

pub use presentation::{validate_params, FoxMatrix, KnotParamError, Presentation, PresentationError, Relation, Sign};
pub use reduced::{reduced_presentation, reduced_relations, BoundaryArc};
pub use wirtinger::{band_counts, pretzel_diagram, wirtinger_presentation, PretzelDiagram};
pub use word::{fox_derivative, Gen, GroupRingElem, GroupWord, Letter};
