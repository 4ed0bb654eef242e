//! Graded ring presentations, their graded pieces, pro-ring towers and
//! symmetric-function utilities.

mod flag;
pub(crate) mod linalg;
mod morphism;
pub(crate) mod piece;
pub(crate) mod presentation;
mod pro;
mod snf;
mod symmetric;

pub use flag::{flag_ring, grassmannian_embedding, grassmannian_image_ranks, grassmannian_ring};
pub use linalg::rational_rank;
pub use morphism::Morphism;
pub use piece::{graded_piece_snf, standard_piece_count, total_rank, GradedPieceReport};
pub use presentation::{
    Generator, GeneratorKind, PresentationDoc, Relation, RelationDoc, RingPresentation,
};
pub use pro::{pro_stabilize, ProRing, Stabilization, StabilizationReport};
pub use snf::invariant_factors;
pub use symmetric::{
    asymmetry_witness, complete_homogeneous, elementary_space, elementary_symmetric,
    express_symmetric,
};
