use super::Theory;
use crate::error::{Error, Result};
use crate::presentations::{
    graded_piece_snf, Generator, GradedPieceReport, Relation, RingPresentation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuCoefficients {
    pub n: i64,
    pub theory: Theory,
    /// `coefficients[[ξ]] / ([n](ξ))` with `ξ = c₁𝒪(−1)`.
    pub presentation: RingPresentation,
    /// Degree-`d` pieces, `d = 0..=D`.
    pub pieces: Vec<GradedPieceReport>,
    /// Over rational rings: whether `[n](ξ) = ξ·u(ξ)` with `u` invertible,
    /// which forces every positive-degree piece to vanish.
    pub cofactor_invertible: Option<bool>,
}

/// The equivariant coefficient ring of `μₙ`.
pub fn mu_n_coefficients(n: i64, theory: Theory, truncation: u32) -> Result<MuCoefficients> {
    if n < 2 {
        return Err(Error::Argument(format!("μₙ needs n ≥ 2, got {n}")));
    }
    let base = RingPresentation::new(
        theory.ring(),
        vec![Generator::series("ξ", 1)],
        vec![],
        truncation,
    )?;
    let law = theory.law(truncation)?;
    let relation = law.n_series(n)?.relabel(base.space())?;
    let cofactor_invertible = theory.ring().is_rational().then(|| {
        relation
            .divide_by_variable(0)
            .and_then(|u| u.reciprocal())
            .is_ok()
    });
    let presentation = RingPresentation::from_space(
        base.space().clone(),
        base.kinds().to_vec(),
        vec![Relation::General(relation)],
    )?;
    let pieces = (0..=truncation as i64)
        .map(|d| graded_piece_snf(&presentation, d))
        .collect::<Result<Vec<_>>>()?;
    Ok(MuCoefficients {
        n,
        theory,
        presentation,
        pieces,
        cofactor_invertible,
    })
}
