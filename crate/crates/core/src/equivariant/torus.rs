use super::Theory;
use crate::algebra::Series;
use crate::error::{Error, Result};
use crate::presentations::{
    graded_piece_snf, pro_stabilize, Generator, GradedPieceReport, ProRing, Relation,
    RingPresentation, Stabilization, StabilizationReport,
};

/// `t` for a rank-one torus, `t1 … tr` otherwise.
pub fn torus_names(r: usize) -> Vec<String> {
    if r == 1 {
        vec!["t".into()]
    } else {
        (1..=r).map(|j| format!("t{j}")).collect()
    }
}

/// Stage `i` of the Borel tower: `coefficients[t₁ … t_r] / (t₁^{i−1}, …, t_r^{i−1})`,
/// the cobordism of `(ℙ^{i−2})^r`. Stage 1 is the zero ring.
pub fn torus_stage(
    r: usize,
    theory: Theory,
    truncation: u32,
    i: usize,
) -> Result<RingPresentation> {
    if i == 0 {
        return Err(Error::Argument("torus stages start at 1".into()));
    }
    let gens = torus_names(r)
        .into_iter()
        .map(|n| Generator::polynomial(n, 1))
        .collect();
    let base = RingPresentation::new(theory.ring(), gens, vec![], truncation)?;
    let relations = (0..r)
        .map(|j| Relation::Monic {
            variable: j,
            power: i as u32 - 1,
            rewrite: Series::zero(base.space()),
        })
        .collect();
    RingPresentation::from_space(base.space().clone(), base.kinds().to_vec(), relations)
}

pub fn torus_tower(r: usize, theory: Theory, truncation: u32) -> ProRing {
    ProRing::new(format!("torus rank {r} ({theory})"), 1, move |i| {
        torus_stage(r, theory, truncation, i)
    })
}

/// The power-series ring on `r` degree-1 generators.
pub fn torus_limit(r: usize, theory: Theory, truncation: u32) -> Result<RingPresentation> {
    let gens = torus_names(r)
        .into_iter()
        .map(|n| Generator::series(n, 1))
        .collect();
    RingPresentation::new(theory.ring(), gens, vec![], truncation)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCoefficients {
    pub rank: usize,
    pub theory: Theory,
    pub limit: RingPresentation,
    /// Degree-`d` pieces of the limit, `d = 0..=D`.
    pub pieces: Vec<GradedPieceReport>,
    /// Stabilization of the tower in each degree `d = 0..=D`.
    pub stabilization: Vec<StabilizationReport>,
    /// Whether every stable stage agrees with the limit in its degree.
    pub limit_agrees: bool,
}

/// The equivariant coefficient ring of a split torus of rank `r`, computed
/// as the limit of the Borel tower.
pub fn torus_coefficients(r: usize, theory: Theory, truncation: u32) -> Result<TorusCoefficients> {
    if r == 0 {
        return Err(Error::Argument("a torus needs rank r ≥ 1".into()));
    }
    let limit = torus_limit(r, theory, truncation)?;
    let mut tower = torus_tower(r, theory, truncation);
    let last = truncation as usize + 3;
    let mut pieces = Vec::new();
    let mut stabilization = Vec::new();
    let mut limit_agrees = true;
    for d in 0..=truncation as i64 {
        let piece = graded_piece_snf(&limit, d)?;
        let report = pro_stabilize(&mut tower, d, last)?;
        limit_agrees &= match report.outcome {
            Stabilization::Stable { index } => report
                .stages
                .iter()
                .filter(|(i, _)| *i >= index)
                .all(|(_, s)| s.same_group(&piece)),
            Stabilization::Inconclusive { .. } => false,
        };
        pieces.push(piece);
        stabilization.push(report);
    }
    Ok(TorusCoefficients {
        rank: r,
        theory,
        limit,
        pieces,
        stabilization,
        limit_agrees,
    })
}

/// `Ω*(X)[[t₁ … t_r]]`: adjoins `r` degree-1 series generators to `base`.
pub fn trivial_torus_action(
    base: &RingPresentation,
    r: usize,
    truncation: u32,
) -> Result<RingPresentation> {
    let base = if base.truncation() == truncation {
        base.clone()
    } else {
        base.with_truncation(truncation)?
    };
    if r == 0 {
        return Ok(base);
    }
    let taken: Vec<String> = base.generators().into_iter().map(|g| g.name).collect();
    let extra: Vec<Generator> = torus_names(r)
        .into_iter()
        .map(|n| {
            if taken.contains(&n) {
                format!("{n}'")
            } else {
                n
            }
        })
        .map(|n| Generator::series(n, 1))
        .collect();
    base.adjoin(&extra)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_universal() {
        let t = torus_coefficients(1, Theory::Universal, 4).unwrap();
        assert!(t.limit_agrees);
        assert!(t.pieces.iter().all(|p| p.rank == 1));
        for (d, s) in t.stabilization.iter().enumerate() {
            assert_eq!(s.outcome, Stabilization::Stable { index: d + 2 });
        }
    }

    #[test]
    fn rank_two_chow() {
        let t = torus_coefficients(2, Theory::Chow, 3).unwrap();
        let ranks: Vec<u64> = t.pieces.iter().map(|p| p.rank).collect();
        assert_eq!(ranks, [1, 2, 3, 4]);
        assert!(t.limit_agrees);
    }

    #[test]
    fn trivial_action_on_a_point_is_the_torus() {
        let point = RingPresentation::new(Theory::Universal.ring(), vec![], vec![], 3).unwrap();
        let p = trivial_torus_action(&point, 1, 3).unwrap();
        assert_eq!(p, torus_limit(1, Theory::Universal, 3).unwrap());
        assert_eq!(trivial_torus_action(&point, 0, 3).unwrap(), point);
    }
}
