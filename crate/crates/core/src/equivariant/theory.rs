use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{CoefficientMap, CoefficientRing, Series};
use crate::error::{Error, Result};
use crate::fgl::FormalGroupLaw;
use crate::presentations::RingPresentation;

/// The oriented theories the engine knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    /// Algebraic cobordism, rationalized: the universal law over `ℚ[t₁,t₂,…]`.
    Universal,
    /// Chow rings: the additive law over `ℤ`.
    Chow,
    /// `K⁰[β,β⁻¹]`: the multiplicative law over `ℤ[β,β⁻¹]`.
    KTheory,
}

impl Theory {
    pub const ALL: [Theory; 3] = [Theory::Universal, Theory::Chow, Theory::KTheory];

    pub fn ring(self) -> CoefficientRing {
        match self {
            Theory::Universal => CoefficientRing::LazardRational,
            Theory::Chow => CoefficientRing::IntegerAdditive,
            Theory::KTheory => CoefficientRing::LaurentMultiplicative,
        }
    }

    pub fn law(self, d: u32) -> Result<FormalGroupLaw> {
        match self {
            Theory::Universal => FormalGroupLaw::universal(d),
            Theory::Chow => FormalGroupLaw::additive(self.ring(), d),
            Theory::KTheory => FormalGroupLaw::multiplicative(self.ring(), d),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Theory::Universal => "universal",
            Theory::Chow => "chow",
            Theory::KTheory => "ktheory",
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theory {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theory::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                Error::Argument(format!(
                    "unknown theory {s}; expected universal, chow or ktheory"
                ))
            })
    }
}

/// A theory together with its law at a fixed truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoryDescriptor {
    pub theory: Theory,
    pub ring: CoefficientRing,
    pub law: FormalGroupLaw,
}

impl TheoryDescriptor {
    pub fn new(theory: Theory, d: u32) -> Result<Self> {
        Ok(TheoryDescriptor {
            theory,
            ring: theory.ring(),
            law: theory.law(d)?,
        })
    }
}

/// The coefficient morphism from the universal theory: `tᵢ ↦ 0` for Chow,
/// `tᵢ ↦ βⁱ/(i+1)` for K-theory. Targets are rational; the universal theory
/// maps to itself.
pub fn specialization_map(to: Theory, d: u32) -> CoefficientMap {
    let count = d.max(1) as usize;
    match to {
        Theory::Universal => CoefficientMap::identity(CoefficientRing::LazardRational, count),
        Theory::Chow => CoefficientMap::lazard_to_additive(count),
        Theory::KTheory => CoefficientMap::lazard_to_multiplicative(count),
    }
}

fn check_universal(ring: CoefficientRing) -> Result<()> {
    if ring != CoefficientRing::LazardRational {
        return Err(Error::Argument(format!(
            "specialization starts from the universal theory, got {}",
            ring.label()
        )));
    }
    Ok(())
}

/// Specializes a universal series to the rationalized Chow or K-theory.
pub fn specialize_series(x: &Series, to: Theory) -> Result<Series> {
    check_universal(x.ring())?;
    x.specialize(&specialization_map(to, x.truncation()))
}

/// Specializes every relation of a universal presentation.
pub fn specialize_presentation(p: &RingPresentation, to: Theory) -> Result<RingPresentation> {
    check_universal(p.ring())?;
    p.specialize(&specialization_map(to, p.truncation()))
}

/// Specializes the universal law; the result is compared against the
/// rationalized direct law by callers.
pub fn specialize_law(law: &FormalGroupLaw, to: Theory) -> Result<FormalGroupLaw> {
    check_universal(law.ring())?;
    law.specialize(&specialization_map(to, law.truncation()))
}

/// Moves an integral presentation to its rationalization.
pub fn rationalize_presentation(p: &RingPresentation) -> Result<RingPresentation> {
    if p.ring().is_rational() {
        return Ok(p.clone());
    }
    p.specialize(&CoefficientMap::rationalize(p.ring()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        for t in Theory::ALL {
            assert_eq!(t.name().parse::<Theory>().unwrap(), t);
        }
        assert!("cobordism".parse::<Theory>().is_err());
    }

    #[test]
    fn specialized_universal_laws() {
        let u = FormalGroupLaw::universal(4).unwrap();
        assert_eq!(
            specialize_law(&u, Theory::Chow)
                .unwrap()
                .series()
                .to_string(),
            "u + v"
        );
        let u2 = FormalGroupLaw::universal(2).unwrap();
        assert_eq!(
            specialize_law(&u2, Theory::KTheory)
                .unwrap()
                .series()
                .to_string(),
            "u + v - βuv"
        );
        let k4 = specialize_law(&u, Theory::KTheory).unwrap();
        let direct =
            FormalGroupLaw::multiplicative(CoefficientRing::RationalMultiplicative, 4).unwrap();
        assert_eq!(k4.series(), direct.series());
    }

    #[test]
    fn non_universal_input_is_rejected() {
        let chow = FormalGroupLaw::additive(CoefficientRing::IntegerAdditive, 3).unwrap();
        assert!(matches!(
            specialize_law(&chow, Theory::Chow),
            Err(Error::Argument(_))
        ));
    }
}
