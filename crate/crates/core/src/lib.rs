//! Exact computations with formal group laws and the coefficient rings of
//! equivariant algebraic cobordism.
//!
//! The crate is layered:
//!
//! * [`algebra`]: exact scalars, graded coefficient rings (`ℚ[t₁,t₂,…]`,
//!   `ℤ`, `ℤ[β,β⁻¹]` and rationalizations) and truncated power series.
//! * [`fgl`]: formal group laws (universal via the logarithm, additive,
//!   multiplicative), formal inverse, n-series, conjugation and twisting.
//! * [`presentations`]: graded ring presentations with monic-rewriting
//!   normal forms, per-degree Smith normal form, pro-ring towers and
//!   symmetric-function utilities (flag varieties, Grassmannians).
//! * [`equivariant`]: the named computations: torus, weighted `ℙⁿ`,
//!   trivial actions, `GLₙ`, `μₙ`, projective bundles, Chern classes,
//!   specializations and the `GLₙ → T` restriction.

pub mod algebra;
pub mod equivariant;
mod error;
pub mod fgl;
pub mod presentations;

pub use error::{Error, Result};
