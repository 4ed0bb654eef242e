use super::{Coefficient, CoefficientRing, Scalar};
use crate::error::{Error, Result};

/// A graded ring morphism between coefficient rings, given by the images of
/// the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientMap {
    source: CoefficientRing,
    target: CoefficientRing,
    images: Vec<Coefficient>,
}

impl CoefficientMap {
    /// Each image must be homogeneous of its generator's degree; images of
    /// invertible generators must be units.
    pub fn new(
        source: CoefficientRing,
        target: CoefficientRing,
        images: Vec<Coefficient>,
    ) -> Result<Self> {
        if source.is_rational() && target.is_integral() {
            return Err(Error::Structural(format!(
                "no morphism from {} to {}",
                source.label(),
                target.label()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if !source.has_generator(i) {
                return Err(Error::Structural(format!(
                    "{} has no generator #{}",
                    source.label(),
                    i + 1
                )));
            }
            if img.ring() != target {
                return Err(Error::Structural(format!(
                    "image of {} lies in {}, expected {}",
                    source.generator_name(i),
                    img.ring().label(),
                    target.label()
                )));
            }
            let want = source.generator_degree(i);
            if !img.is_homogeneous_of(want) {
                return Err(Error::Grading(format!(
                    "image {img} of {} is not homogeneous of degree {want}",
                    source.generator_name(i)
                )));
            }
            if source.generator_invertible(i) && !img.is_unit() {
                return Err(Error::Grading(format!(
                    "image of invertible generator {} must be a unit",
                    source.generator_name(i)
                )));
            }
        }
        Ok(CoefficientMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(ring: CoefficientRing, generators: usize) -> Self {
        let count = ring.generator_count().unwrap_or(generators);
        let images = (0..count)
            .map(|i| Coefficient::generator(ring, i).unwrap())
            .collect();
        CoefficientMap {
            source: ring,
            target: ring,
            images,
        }
    }

    /// `ℤ → ℚ` or `ℤ[β,β⁻¹] → ℚ[β,β⁻¹]`, identity on generators.
    pub fn rationalize(ring: CoefficientRing) -> Self {
        let target = ring.rationalization();
        let count = ring.generator_count().unwrap_or(0);
        let images = (0..count)
            .map(|i| Coefficient::generator(target, i).unwrap())
            .collect();
        CoefficientMap {
            source: ring,
            target,
            images,
        }
    }

    /// `tᵢ ↦ 0` for the first `count` Lazard generators: the additive law.
    pub fn lazard_to_additive(count: usize) -> Self {
        let target = CoefficientRing::RationalAdditive;
        CoefficientMap {
            source: CoefficientRing::LazardRational,
            target,
            images: vec![Coefficient::zero(target); count],
        }
    }

    /// `tᵢ ↦ βⁱ/(i+1)`: the logarithm `−β⁻¹ ln(1 − βu)` of `u + v − βuv`.
    pub fn lazard_to_multiplicative(count: usize) -> Self {
        let target = CoefficientRing::RationalMultiplicative;
        let images = (1..=count)
            .map(|i| {
                Coefficient::monomial(target, vec![i as i32], Scalar::ratio(1, i as i64 + 1))
                    .unwrap()
            })
            .collect();
        CoefficientMap {
            source: CoefficientRing::LazardRational,
            target,
            images,
        }
    }

    pub fn source(&self) -> CoefficientRing {
        self.source
    }

    pub fn target(&self) -> CoefficientRing {
        self.target
    }

    pub fn images(&self) -> &[Coefficient] {
        &self.images
    }

    pub fn apply(&self, x: &Coefficient) -> Result<Coefficient> {
        if x.ring() != self.source {
            return Err(Error::Structural(format!(
                "coefficient in {}, map expects {}",
                x.ring().label(),
                self.source.label()
            )));
        }
        let mut out = Coefficient::zero(self.target);
        for (exps, s) in x.terms() {
            let mut term = Coefficient::scalar(self.target, s.clone())?;
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = self.images.get(i).ok_or_else(|| {
                    Error::Structural(format!(
                        "generator {} is not mapped",
                        self.source.generator_name(i)
                    ))
                })?;
                let base = if e < 0 {
                    img.inverse()
                        .ok_or_else(|| Error::Grading("inverting a non-unit image".into()))?
                } else {
                    img.clone()
                };
                term = term.mul(&base.pow(e.unsigned_abs()));
            }
            out = out.add(&term);
        }
        Ok(out)
    }
}
