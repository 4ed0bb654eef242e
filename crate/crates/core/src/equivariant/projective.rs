use super::chern::chern_classes_of_sum;
use super::torus::torus_limit;
use super::Theory;
use crate::algebra::Series;
use crate::error::{Error, Result};
use crate::presentations::presentation::embed;
use crate::presentations::{
    graded_piece_snf, standard_piece_count, Generator, Relation, RingPresentation,
};

/// Projective bundle of a sum of line bundles with first Chern classes
/// `roots`: adjoins `ξ` of degree 1 with `∏ⱼ (ξ − rootⱼ) = 0`, i.e.
/// `ξ^{r+1} = Σ_{n≥1} (−1)^{n+1} c_n ξ^{r+1−n}`.
///
/// The new relation is listed first so the base relations keep reducing the
/// coefficients of its rewrite.
pub fn projective_bundle(base: &RingPresentation, roots: &[Series]) -> Result<RingPresentation> {
    if roots.is_empty() {
        return Err(Error::Argument(
            "a projective bundle needs at least one root".into(),
        ));
    }
    for (j, root) in roots.iter().enumerate() {
        if **root.space() != **base.space() {
            return Err(Error::Structural(format!(
                "root {} is not an element of the base",
                j + 1
            )));
        }
        if !root.constant_term().is_zero() {
            return Err(Error::Grading(format!(
                "root {} has a constant term",
                j + 1
            )));
        }
    }
    let chern = chern_classes_of_sum(roots)?;
    let name = fresh_name(base, "ξ");
    let p = base.adjoin(&[Generator::polynomial(name, 1)])?;
    let space = p.space().clone();
    let k = space.arity() - 1;
    let xi = Series::variable(&space, k);
    let r1 = roots.len() as u32;
    let mut rewrite = Series::zero(&space);
    for (n, c) in chern.iter().enumerate().skip(1) {
        let term = embed(c, &space, 0)?.try_mul(&xi.pow(r1 - n as u32))?;
        rewrite = if n % 2 == 1 {
            rewrite.try_add(&term)?
        } else {
            rewrite.try_sub(&term)?
        };
    }
    let mut relations = vec![Relation::Monic {
        variable: k,
        power: r1,
        rewrite,
    }];
    relations.extend(p.relations().iter().cloned());
    RingPresentation::from_space(space, p.kinds().to_vec(), relations)
}

fn fresh_name(base: &RingPresentation, stem: &str) -> String {
    let taken: Vec<String> = base.generators().into_iter().map(|g| g.name).collect();
    let mut name = stem.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// `ℙⁿ` with `G_m` acting with weights `m₀ … m_n`:
/// `coefficients[[t]][ξ] / ∏ⱼ (ξ − [mⱼ](t))`.
pub fn weighted_gm_projective(
    weights: &[i64],
    theory: Theory,
    truncation: u32,
) -> Result<RingPresentation> {
    if weights.is_empty() {
        return Err(Error::Argument("at least one weight is required".into()));
    }
    let base = torus_limit(1, theory, truncation)?;
    let law = theory.law(truncation)?;
    let mut cache = crate::fgl::NSeries::new(&law)?;
    let roots = weights
        .iter()
        .map(|&m| cache.get(m)?.relabel(base.space()))
        .collect::<Result<Vec<_>>>()?;
    projective_bundle(&base, &roots)
}

/// Per-degree comparison of a presentation's graded pieces with the count
/// of standard monomials: equal counts and no torsion in every degree
/// `0..=D` mean the ring is free on the standard monomials.
pub fn verify_free(p: &RingPresentation) -> Result<Vec<(i64, u64, u64, bool)>> {
    (0..=p.truncation() as i64)
        .map(|d| {
            let report = graded_piece_snf(p, d)?;
            let expected = standard_piece_count(p, d)?;
            let ok = report.rank == expected && report.torsion().is_empty();
            Ok((d, expected, report.rank, ok))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relation_text(p: &RingPresentation) -> String {
        p.relation_elements()[0].to_string()
    }

    #[test]
    fn weights_zero_one() {
        for theory in Theory::ALL {
            let p = weighted_gm_projective(&[0, 1], theory, 3).unwrap();
            assert_eq!(relation_text(&p), "-tξ + ξ²", "{theory}");
        }
    }

    #[test]
    fn equal_weights_under_chow() {
        let p = weighted_gm_projective(&[1, 1], Theory::Chow, 3).unwrap();
        assert_eq!(relation_text(&p), "t² - 2tξ + ξ²");
        let p = weighted_gm_projective(&[2, 2, 2], Theory::Chow, 4).unwrap();
        assert_eq!(relation_text(&p), "-8t³ + 12t²ξ - 6tξ² + ξ³");
    }

    #[test]
    fn point() {
        let p = weighted_gm_projective(&[0], Theory::Universal, 3).unwrap();
        assert_eq!(relation_text(&p), "ξ");
        assert!(verify_free(&p).unwrap().iter().all(|r| r.3));
    }

    #[test]
    fn projective_space_over_a_point() {
        let point = RingPresentation::new(Theory::Chow.ring(), vec![], vec![], 4).unwrap();
        let zero = Series::zero(point.space());
        let p = projective_bundle(&point, &[zero.clone(), zero.clone(), zero]).unwrap();
        assert_eq!(relation_text(&p), "ξ³");
        let ranks: Vec<u64> = verify_free(&p).unwrap().iter().map(|r| r.2).collect();
        assert_eq!(ranks, [1, 1, 1, 0, 0]);
    }

    #[test]
    fn weighted_ranks_are_free() {
        for theory in Theory::ALL {
            let p = weighted_gm_projective(&[0, 1, -1], theory, 4).unwrap();
            let checks = verify_free(&p).unwrap();
            assert!(checks.iter().all(|c| c.3), "{theory}: {checks:?}");
        }
    }
}
