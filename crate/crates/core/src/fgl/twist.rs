use crate::algebra::{Coefficient, Series};
use crate::error::{Error, Result};

use super::FormalGroupLaw;

fn check_tau(tau: &[Coefficient]) -> Result<()> {
    let first = tau
        .first()
        .ok_or_else(|| Error::Twisting("empty twisting sequence".into()))?;
    if !first.is_unit() {
        return Err(Error::Twisting(format!("τ₀ = {first} is not a unit")));
    }
    for (i, c) in tau.iter().enumerate() {
        if !c.is_homogeneous_of(-(i as i64)) {
            return Err(Error::Twisting(format!(
                "τ{i} = {c} is not homogeneous of degree -{i}"
            )));
        }
    }
    Ok(())
}

/// `Σ_{i≥0} τᵢ xⁱ`: the τ-inverse Todd class of a line bundle with first
/// Chern class `x`. Missing `τᵢ` are zero.
pub fn todd_inverse_operator(tau: &[Coefficient], x: &Series) -> Result<Series> {
    check_tau(tau)?;
    if !x.constant_term().is_zero() {
        return Err(Error::Twisting(
            "a first Chern class has zero constant term".into(),
        ));
    }
    let mut out = Series::zero(x.space());
    let mut power = Series::one(x.space());
    for c in tau {
        if power.is_zero() {
            break;
        }
        out = out.try_add(&power.scale(c)?)?;
        power = power.try_mul(x)?;
    }
    Ok(out)
}

/// The law of the τ-twisted theory: conjugation by `u · Td⁻¹_τ(u)`.
pub fn twist(law: &FormalGroupLaw, tau: &[Coefficient]) -> Result<FormalGroupLaw> {
    let space = crate::algebra::SeriesSpace::univariate(law.ring(), "u", law.truncation());
    let u = Series::variable(&space, 0);
    let phi = u.try_mul(&todd_inverse_operator(tau, &u)?)?;
    law.conjugate(&phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CoefficientRing, SeriesSpace};

    const L: CoefficientRing = CoefficientRing::LazardRational;

    fn lt(i: usize) -> Coefficient {
        Coefficient::generator(L, i - 1).unwrap()
    }

    #[test]
    fn trivial_tau() {
        let s = SeriesSpace::univariate(L, "u", 3);
        let u = Series::variable(&s, 0);
        let tau = [
            Coefficient::one(L),
            Coefficient::zero(L),
            Coefficient::zero(L),
        ];
        assert_eq!(todd_inverse_operator(&tau, &u).unwrap(), Series::one(&s));
    }

    #[test]
    fn substitution_examples() {
        let s = SeriesSpace::univariate(L, "u", 2);
        let u = Series::variable(&s, 0);
        let tau = [Coefficient::one(L), lt(1), lt(2)];
        assert_eq!(
            todd_inverse_operator(&tau, &u).unwrap().to_string(),
            "1 + t₁u + t₂u²"
        );

        let s1 = SeriesSpace::univariate(L, "u", 1);
        let two_u = Series::variable(&s1, 0).scale_int(2);
        assert_eq!(
            todd_inverse_operator(&[Coefficient::one(L), lt(1)], &two_u)
                .unwrap()
                .to_string(),
            "1 + 2t₁u"
        );
    }

    #[test]
    fn bad_tau() {
        let s = SeriesSpace::univariate(CoefficientRing::IntegerAdditive, "u", 2);
        let u = Series::variable(&s, 0);
        let two = Coefficient::from_int(CoefficientRing::IntegerAdditive, 2);
        assert!(matches!(
            todd_inverse_operator(&[two], &u),
            Err(Error::Twisting(_))
        ));
        let one = Coefficient::one(L);
        let s = SeriesSpace::univariate(L, "u", 2);
        let u = Series::variable(&s, 0);
        assert!(matches!(
            todd_inverse_operator(&[one, lt(2)], &u),
            Err(Error::Twisting(_))
        ));
    }

    #[test]
    fn twisting_additive_by_t_has_exponential_u_plus_t() {
        // Twisting u + v by τ = (1, t₁, t₂, …) conjugates by u + Σ tᵢu^{i+1}.
        let d = 4;
        let q = FormalGroupLaw::additive(CoefficientRing::RationalAdditive, d).unwrap();
        let add = q
            .specialize(
                &crate::algebra::CoefficientMap::new(CoefficientRing::RationalAdditive, L, vec![])
                    .unwrap(),
            )
            .unwrap();
        let tau: Vec<_> = (0..d as usize)
            .map(|i| if i == 0 { Coefficient::one(L) } else { lt(i) })
            .collect();
        let twisted = twist(&add, &tau).unwrap();
        let phi = crate::fgl::universal_log(d);
        let expected = add.conjugate(&phi).unwrap();
        assert_eq!(twisted.series(), expected.series());
    }
}
