//! Equivariant coefficient rings and the computations built on them.

mod chern;
mod gln;
mod mu;
mod projective;
mod sample;
mod theory;
mod torus;

pub use chern::{chern_classes_of_sum, whitney_check, WhitneyReport};
pub use gln::{
    gln_coefficients, gln_coefficients_at, gln_limit, partitions_bounded, restrict_gln_to_torus,
    GlnCoefficients, GrassmannianEvidence, RestrictionReport,
};
pub use mu::{mu_n_coefficients, MuCoefficients};
pub use projective::{projective_bundle, verify_free, weighted_gm_projective};
pub use sample::sample_degree_one;
pub use theory::{
    rationalize_presentation, specialization_map, specialize_law, specialize_presentation,
    specialize_series, Theory, TheoryDescriptor,
};
pub use torus::{
    torus_coefficients, torus_limit, torus_names, torus_stage, torus_tower, trivial_torus_action,
    TorusCoefficients,
};
