use anyhow::{bail, Context};
use eqcob_core::algebra::{Coefficient, CoefficientRing, Scalar, Series, SeriesSpace};
use eqcob_core::equivariant::{
    chern_classes_of_sum, gln_coefficients, mu_n_coefficients, projective_bundle,
    rationalize_presentation, restrict_gln_to_torus, specialize_law, specialize_presentation,
    torus_coefficients, torus_limit, verify_free, weighted_gm_projective, Theory,
};
use eqcob_core::fgl::{law_space, twist, FormalGroupLaw, NSeries};
use eqcob_core::presentations::{GradedPieceReport, RingPresentation, Stabilization};
use serde_json::{json, Value};

use crate::outcome::Outcome;

const BETA_ONE_NOTE: &str =
    "ktheory pieces are computed at β = 1, so every degree sees the whole truncated ring";

fn pieces_json(pieces: &[GradedPieceReport]) -> Value {
    serde_json::to_value(pieces).expect("pieces serialize")
}

fn piece_lines(out: &mut Outcome, pieces: &[GradedPieceReport]) {
    for p in pieces {
        out.line(format!("  degree {}: {}", p.degree, p));
    }
}

fn presentation_lines(out: &mut Outcome, p: &RingPresentation) {
    for l in p.to_string().lines() {
        out.line(l);
    }
}

pub fn fgl(theory: Theory, d: u32) -> anyhow::Result<Outcome> {
    let law = theory.law(d)?;
    let mut out = Outcome::new(law.to_doc())?;
    out.line(format!("F(u, v) = {}", law.series()));
    if let Some(log) = law.log() {
        out.line(format!("log(u) = {log}"));
    }
    Ok(out)
}

pub fn nseries(theory: Theory, d: u32, n: i64) -> anyhow::Result<Outcome> {
    let s = theory.law(d)?.n_series(n)?;
    let mut out = Outcome::new(s.to_doc())?;
    out.line(s.to_string());
    Ok(out)
}

pub fn inverse(theory: Theory, d: u32) -> anyhow::Result<Outcome> {
    let s = theory.law(d)?.formal_inverse()?;
    let mut out = Outcome::new(s.to_doc())?;
    out.line(s.to_string());
    Ok(out)
}

/// The theory's law over its rationalized ring, with a logarithm.
fn rational_law(theory: Theory, d: u32) -> anyhow::Result<FormalGroupLaw> {
    Ok(match theory {
        Theory::Universal => FormalGroupLaw::universal(d)?,
        Theory::Chow => FormalGroupLaw::additive(CoefficientRing::RationalAdditive, d)?,
        Theory::KTheory => {
            FormalGroupLaw::multiplicative(CoefficientRing::RationalMultiplicative, d)?
        }
    })
}

fn tau_coefficient(ring: CoefficientRing, i: usize, a: i64) -> anyhow::Result<Coefficient> {
    if i == 0 || a == 0 {
        return Ok(Coefficient::from_int(ring, a));
    }
    Ok(match ring {
        CoefficientRing::LazardRational | CoefficientRing::LaurentMultiplicative => {
            Coefficient::monomial(ring, vec![i as i32], Scalar::from_int(a))?
        }
        _ => Coefficient::from_int(ring, a),
    })
}

pub fn conjugate(theory: Theory, d: u32, tau: Option<&[i64]>) -> anyhow::Result<Outcome> {
    if let Some(tau) = tau {
        let law = theory.law(d)?;
        let coeffs = tau
            .iter()
            .enumerate()
            .map(|(i, &a)| tau_coefficient(law.ring(), i, a))
            .collect::<anyhow::Result<Vec<_>>>()?;
        let twisted = twist(&law, &coeffs)?;
        let mut out = Outcome::new(json!({ "tau": tau_text(&coeffs), "law": twisted.to_doc() }))?;
        out.line(format!("τ = ({})", tau_text(&coeffs).join(", ")));
        out.line(format!("F(u, v) = {}", twisted.series()));
        return Ok(out);
    }
    let law = rational_law(theory, d)?;
    let exp = law.exp().context("law has no logarithm")??;
    let space = law_space(law.ring(), d);
    let sum = Series::variable(&space, 0).try_add(&Series::variable(&space, 1))?;
    let unit = Series::variable(&SeriesSpace::univariate(law.ring(), "u", d), 0);
    let additive = FormalGroupLaw::from_series(sum, Some(unit))?;
    let conjugated = additive.conjugate(&exp)?;
    let matches = conjugated.series() == law.series();
    let mut out = Outcome::new(json!({
        "exp": exp.to_doc(),
        "law": conjugated.to_doc(),
        "matches_law_from_log": matches,
    }))?;
    out.line(format!("exp(u) = {exp}"));
    out.line(format!("F(u, v) = {}", conjugated.series()));
    out.line(format!(
        "matches the law from its logarithm: {}",
        if matches { "yes" } else { "no" }
    ));
    out.passed = matches;
    Ok(out)
}

fn tau_text(coeffs: &[Coefficient]) -> Vec<String> {
    coeffs.iter().map(|c| c.to_string()).collect()
}

pub fn coeff_torus(theory: Theory, d: u32, r: usize) -> anyhow::Result<Outcome> {
    let t = torus_coefficients(r, theory, d)?;
    let stable: Vec<Value> = t
        .stabilization
        .iter()
        .map(|s| json!({ "degree": s.degree, "outcome": s.outcome }))
        .collect();
    let mut out = Outcome::new(json!({
        "presentation": t.limit.to_doc(),
        "pieces": pieces_json(&t.pieces),
        "stabilization": stable,
        "limit_agrees": t.limit_agrees,
    }))?;
    presentation_lines(&mut out, &t.limit);
    out.line("graded pieces:");
    piece_lines(&mut out, &t.pieces);
    out.line("tower stabilization:");
    for s in &t.stabilization {
        out.line(match s.outcome {
            Stabilization::Stable { index } => {
                format!("  degree {}: stable from stage {index}", s.degree)
            }
            Stabilization::Inconclusive { last } => {
                format!("  degree {}: not settled by stage {last}", s.degree)
            }
        });
    }
    if theory == Theory::KTheory {
        out.note(BETA_ONE_NOTE);
    }
    Ok(out)
}

pub fn coeff_gln(theory: Theory, d: u32, n: usize) -> anyhow::Result<Outcome> {
    let g = gln_coefficients(n, theory, d)?;
    let mut out = Outcome::new(json!({
        "presentation": g.limit.to_doc(),
        "pieces": pieces_json(&g.pieces),
        "grassmannian_stage": g.evidence.i,
        "grassmannian_pieces": pieces_json(&g.evidence.stage_pieces),
        "grassmannian_matches": g.evidence.matches,
    }))?;
    presentation_lines(&mut out, &g.limit);
    out.line("graded pieces:");
    piece_lines(&mut out, &g.pieces);
    out.line(format!(
        "Gr({n}, {}) agrees through degree {d}: {}",
        n + g.evidence.i,
        if g.evidence.matches { "yes" } else { "no" }
    ));
    if theory == Theory::KTheory {
        out.note(BETA_ONE_NOTE);
    }
    Ok(out)
}

pub fn coeff_mu(theory: Theory, d: u32, n: i64) -> anyhow::Result<Outcome> {
    let m = mu_n_coefficients(n, theory, d)?;
    let mut out = Outcome::new(json!({
        "presentation": m.presentation.to_doc(),
        "pieces": pieces_json(&m.pieces),
        "cofactor_invertible": m.cofactor_invertible,
    }))?;
    presentation_lines(&mut out, &m.presentation);
    out.line("graded pieces:");
    piece_lines(&mut out, &m.pieces);
    if let Some(inv) = m.cofactor_invertible {
        out.line(format!(
            "[{n}](ξ)/ξ invertible: {}",
            if inv { "yes" } else { "no" }
        ));
    }
    if theory == Theory::KTheory {
        out.note(BETA_ONE_NOTE);
    }
    Ok(out)
}

fn freeness(out: &mut Outcome, p: &RingPresentation) -> anyhow::Result<Value> {
    let checks = verify_free(p)?;
    let free = checks.iter().all(|c| c.3);
    out.line("freeness over the base:");
    for (deg, expected, rank, ok) in &checks {
        out.line(format!(
            "  degree {deg}: {rank} of {expected} standard monomials{}",
            if *ok { "" } else { "  MISMATCH" }
        ));
    }
    out.passed &= free;
    let rows: Vec<Value> = checks
        .iter()
        .map(|(deg, e, r, ok)| json!({ "degree": deg, "standard": e, "rank": r, "ok": ok }))
        .collect();
    Ok(json!({ "free": free, "degrees": rows }))
}

pub fn pn_weighted(theory: Theory, d: u32, weights: &[i64]) -> anyhow::Result<Outcome> {
    let p = weighted_gm_projective(weights, theory, d)?;
    let relation = p.relation_elements()[0].clone();
    let mut out = Outcome::new(Value::Null)?;
    presentation_lines(&mut out, &p);
    let free = freeness(&mut out, &p)?;
    out.result = json!({
        "presentation": p.to_doc(),
        "relation": relation.to_doc(),
        "freeness": free,
    });
    if theory == Theory::KTheory {
        out.note(BETA_ONE_NOTE);
    }
    Ok(out)
}

/// `c₁` of the character `t₁^{w₁} ⋯ t_r^{w_r}` in the torus limit.
fn character_root(
    law: &FormalGroupLaw,
    base: &RingPresentation,
    weights: &[i64],
) -> anyhow::Result<Series> {
    let space = base.space();
    let mut cache = NSeries::new(law)?;
    let mut acc = Series::zero(space);
    for (k, &w) in weights.iter().enumerate() {
        let term = cache
            .get(w)?
            .compose_into(space, &[Series::variable(space, k)])?;
        acc = law.series().compose_into(space, &[acc, term])?;
    }
    Ok(acc)
}

fn character_roots(
    theory: Theory,
    d: u32,
    chars: &[Vec<i64>],
) -> anyhow::Result<(RingPresentation, Vec<Series>)> {
    let r = chars[0].len();
    if r == 0 {
        bail!("a character needs at least one weight");
    }
    if let Some(c) = chars.iter().find(|c| c.len() != r) {
        bail!("characters must all have {r} weights, got {c:?}");
    }
    let base = torus_limit(r, theory, d)?;
    let law = theory.law(d)?;
    let roots = chars
        .iter()
        .map(|c| character_root(&law, &base, c))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok((base, roots))
}

pub fn bundle(theory: Theory, d: u32, chars: &[Vec<i64>]) -> anyhow::Result<Outcome> {
    let (base, roots) = character_roots(theory, d, chars)?;
    let p = projective_bundle(&base, &roots)?;
    let mut out = Outcome::new(Value::Null)?;
    presentation_lines(&mut out, &p);
    let free = freeness(&mut out, &p)?;
    out.result = json!({
        "roots": roots.iter().map(Series::to_doc).collect::<Vec<_>>(),
        "presentation": p.to_doc(),
        "freeness": free,
    });
    if theory == Theory::KTheory {
        out.note(BETA_ONE_NOTE);
    }
    Ok(out)
}

pub fn chern(theory: Theory, d: u32, chars: &[Vec<i64>]) -> anyhow::Result<Outcome> {
    let (_, roots) = character_roots(theory, d, chars)?;
    let classes = chern_classes_of_sum(&roots)?;
    let mut out = Outcome::new(json!({
        "roots": roots.iter().map(Series::to_doc).collect::<Vec<_>>(),
        "chern_classes": classes.iter().map(Series::to_doc).collect::<Vec<_>>(),
    }))?;
    for (k, c) in classes.iter().enumerate() {
        out.line(format!("c{k} = {c}"));
    }
    Ok(out)
}

pub fn restrict_gln(theory: Theory, d: u32, n: usize) -> anyhow::Result<Outcome> {
    let r = restrict_gln_to_torus(n, theory, d)?;
    let images: Vec<Value> = r
        .map
        .images()
        .iter()
        .map(|s| serde_json::to_value(s.to_doc()))
        .collect::<Result<_, _>>()?;
    let ranks: Vec<Value> = r
        .ranks
        .iter()
        .map(|(deg, k, rank)| json!({ "degree": deg, "monomials": k, "rank": rank }))
        .collect();
    let mut out = Outcome::new(json!({
        "images": images,
        "invariant": r.invariant(),
        "asymmetry": r.asymmetry,
        "injective": r.injective(),
        "ranks": ranks,
    }))?;
    let names: Vec<String> = r
        .map
        .source()
        .generators()
        .into_iter()
        .map(|g| g.name)
        .collect();
    for (name, img) in names.iter().zip(r.map.images()) {
        out.line(format!("{name} ↦ {img}"));
    }
    out.line(format!(
        "Sₙ-invariant: {}",
        if r.invariant() { "yes" } else { "no" }
    ));
    for (deg, k, rank) in &r.ranks {
        out.line(format!("  degree {deg}: {k} monomials, image rank {rank}"));
    }
    out.line(format!(
        "injective through degree {d}: {}",
        if r.injective() { "yes" } else { "no" }
    ));
    Ok(out)
}

pub fn specialize(to: Theory, d: u32, weights: &[i64]) -> anyhow::Result<Outcome> {
    let law = specialize_law(&FormalGroupLaw::universal(d)?, to)?;
    let direct_law = rational_law(to, d)?;
    let law_matches = law.series() == direct_law.series();
    let universal = weighted_gm_projective(weights, Theory::Universal, d)?;
    let special = specialize_presentation(&universal, to)?;
    let direct = rationalize_presentation(&weighted_gm_projective(weights, to, d)?)?;
    let presentation_matches = special == direct;
    let mut out = Outcome::new(json!({
        "law": law.to_doc(),
        "law_matches": law_matches,
        "presentation": special.to_doc(),
        "presentation_matches": presentation_matches,
    }))?;
    out.line(format!("F(u, v) = {}", law.series()));
    out.line(format!(
        "matches the direct law: {}",
        if law_matches { "yes" } else { "no" }
    ));
    presentation_lines(&mut out, &special);
    out.line(format!(
        "matches the direct presentation: {}",
        if presentation_matches { "yes" } else { "no" }
    ));
    out.passed = law_matches && presentation_matches;
    Ok(out)
}
