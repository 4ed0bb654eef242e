use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::torus::torus_limit;
use super::Theory;
use crate::algebra::{subscript, Coefficient, Series};
use crate::error::{Error, Result};
use crate::presentations::linalg::sparse_rank;
use crate::presentations::piece::{rational_rows, PieceBasis};
use crate::presentations::{
    asymmetry_witness, elementary_symmetric, graded_piece_snf, grassmannian_ring, Generator,
    GradedPieceReport, Morphism, RingPresentation,
};

/// `coefficients[[η₁ … η_n]]` with `deg η_j = j`.
pub fn gln_limit(n: usize, theory: Theory, truncation: u32) -> Result<RingPresentation> {
    if n == 0 {
        return Err(Error::Argument("GLₙ needs n ≥ 1".into()));
    }
    let gens = (1..=n)
        .map(|j| Generator::series(format!("η{}", subscript(j as u64)), j as u32))
        .collect();
    RingPresentation::new(theory.ring(), gens, vec![], truncation)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannianEvidence {
    /// The stage `Gr(n, n+i)` used.
    pub i: usize,
    pub stage_pieces: Vec<GradedPieceReport>,
    /// Whether the stage agrees with the limit in every degree `0..=D`.
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlnCoefficients {
    pub n: usize,
    pub theory: Theory,
    pub limit: RingPresentation,
    pub pieces: Vec<GradedPieceReport>,
    pub evidence: GrassmannianEvidence,
}

/// The equivariant coefficient ring of `GLₙ`, with a Grassmannian stage
/// `Gr(n, n+i)`, `i = D + 1`, as evidence.
pub fn gln_coefficients(n: usize, theory: Theory, truncation: u32) -> Result<GlnCoefficients> {
    gln_coefficients_at(n, theory, truncation, truncation as usize + 1)
}

pub fn gln_coefficients_at(
    n: usize,
    theory: Theory,
    truncation: u32,
    i: usize,
) -> Result<GlnCoefficients> {
    let limit = gln_limit(n, theory, truncation)?;
    let pieces = (0..=truncation as i64)
        .map(|d| graded_piece_snf(&limit, d))
        .collect::<Result<Vec<_>>>()?;
    let stage = grassmannian_ring(theory.ring(), n, i, truncation)?;
    let stage_pieces = (0..=truncation as i64)
        .map(|d| graded_piece_snf(&stage, d))
        .collect::<Result<Vec<_>>>()?;
    let matches = stage_pieces
        .iter()
        .zip(&pieces)
        .all(|(a, b)| a.same_group(b));
    Ok(GlnCoefficients {
        n,
        theory,
        limit,
        pieces,
        evidence: GrassmannianEvidence {
            i,
            stage_pieces,
            matches,
        },
    })
}

#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub n: usize,
    pub map: Morphism,
    /// First generator image moved by an adjacent transposition.
    pub asymmetry: Option<String>,
    /// `(degree, number of η-monomials, rank of their images)`.
    pub ranks: Vec<(i64, usize, usize)>,
}

impl RestrictionReport {
    pub fn invariant(&self) -> bool {
        self.asymmetry.is_none()
    }

    pub fn injective(&self) -> bool {
        self.ranks.iter().all(|(_, k, r)| k == r)
    }
}

/// `η_j ↦ e_j(t₁ … t_n)`: restriction from `GLₙ` to its maximal torus,
/// checked for `Sₙ`-invariance and injectivity through degree `D`.
pub fn restrict_gln_to_torus(
    n: usize,
    theory: Theory,
    truncation: u32,
) -> Result<RestrictionReport> {
    let source = Arc::new(gln_limit(n, theory, truncation)?);
    let target = Arc::new(torus_limit(n, theory, truncation)?);
    let vars: Vec<usize> = (0..n).collect();
    let images = (1..=n)
        .map(|j| elementary_symmetric(target.space(), &vars, j))
        .collect::<Result<Vec<_>>>()?;
    let asymmetry = images.iter().enumerate().find_map(|(j, img)| {
        asymmetry_witness(img, &vars).map(|(a, b)| {
            let names = target.space().variables();
            format!(
                "η{} under ({} {})",
                subscript(j as u64 + 1),
                names[a].name,
                names[b].name
            )
        })
    });
    let map = Morphism::new(source.clone(), target.clone(), images)?;
    let one = Coefficient::one(theory.ring());
    let mut ranks = Vec::new();
    for d in 0..=truncation as i64 {
        let src = PieceBasis::new(source.space(), d)?;
        let tgt = PieceBasis::new(target.space(), d)?;
        let rows = src
            .monomials()
            .iter()
            .map(|m| {
                let img = map.apply(&Series::monomial(source.space(), m.clone(), one.clone())?)?;
                Ok(tgt.sparse_vector(&img))
            })
            .collect::<Result<Vec<_>>>()?;
        ranks.push((d, rows.len(), sparse_rank(rational_rows(rows))));
    }
    Ok(RestrictionReport {
        n,
        map,
        asymmetry,
        ranks,
    })
}

/// Number of partitions of `d` into parts of size at most `n`.
pub fn partitions_bounded(d: u32, n: u32) -> u64 {
    let mut p = vec![0u64; d as usize + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part as usize..=d as usize {
            p[k] += p[k - part as usize];
        }
    }
    p[d as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl1_is_the_torus() {
        let g = gln_coefficients(1, Theory::Universal, 4).unwrap();
        let t = super::super::torus_coefficients(1, Theory::Universal, 4).unwrap();
        assert_eq!(g.pieces, t.pieces);
        assert!(g.evidence.matches);
    }

    #[test]
    fn gl2_ranks() {
        let g = gln_coefficients(2, Theory::Universal, 3).unwrap();
        let ranks: Vec<u64> = g.pieces.iter().map(|p| p.rank).collect();
        assert_eq!(ranks, [1, 1, 2, 2]);
        assert!(g.evidence.matches);
        let stage = grassmannian_ring(Theory::Chow.ring(), 2, 2, 5).unwrap();
        assert_eq!(crate::presentations::total_rank(&stage).unwrap(), 6);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_bounded(0, 2), 1);
        assert_eq!(partitions_bounded(5, 2), 3);
        assert_eq!(partitions_bounded(5, 3), 5);
        assert_eq!(partitions_bounded(5, 5), 7);
    }

    #[test]
    fn restriction_examples() {
        let r = restrict_gln_to_torus(2, Theory::Universal, 4).unwrap();
        let texts: Vec<String> = r.map.images().iter().map(|s| s.to_string()).collect();
        assert_eq!(texts, ["t1 + t2", "t1t2"]);
        assert!(r.invariant());
        assert!(r.injective());
        let r1 = restrict_gln_to_torus(1, Theory::Chow, 3).unwrap();
        assert_eq!(r1.map.images()[0].to_string(), "t");
    }
}
