//! Formal group laws over the graded coefficient rings.

mod axioms;
mod law;
mod twist;

pub use axioms::{Axiom, AxiomCheck, AxiomReport};
pub use law::{
    law_space, multiplicative_log, universal_log, FormalGroupLaw, LawDoc, LawKind, NSeries,
};
pub use twist::{todd_inverse_operator, twist};
