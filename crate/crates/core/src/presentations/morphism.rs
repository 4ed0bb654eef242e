use std::sync::Arc;

use super::piece::{cokernel, PieceBasis};
use super::RingPresentation;
use crate::algebra::{Coefficient, Series};
use crate::error::{Error, Result};

/// A ring map given by the images of the source generators.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Arc<RingPresentation>,
    target: Arc<RingPresentation>,
    images: Vec<Series>,
}

impl Morphism {
    pub fn new(
        source: Arc<RingPresentation>,
        target: Arc<RingPresentation>,
        images: Vec<Series>,
    ) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::Structural(
                "source and target have different coefficient rings".into(),
            ));
        }
        if source.truncation() < target.truncation() {
            return Err(Error::Truncation(
                "the source truncation is below the target's".into(),
            ));
        }
        if images.len() != source.space().arity() {
            return Err(Error::Structural(format!(
                "{} images given for {} generators",
                images.len(),
                source.space().arity()
            )));
        }
        for (g, img) in source.generators().iter().zip(&images) {
            if **img.space() != **target.space() {
                return Err(Error::Structural(format!(
                    "image of {} is not in the target",
                    g.name
                )));
            }
            if !img.is_homogeneous_of(g.degree as i64) {
                return Err(Error::Grading(format!(
                    "image of {} is not of degree {}",
                    g.name, g.degree
                )));
            }
        }
        Ok(Morphism {
            source,
            target,
            images,
        })
    }

    /// Sends each source generator to the target generator of the same name.
    pub fn identity_by_name(
        source: Arc<RingPresentation>,
        target: Arc<RingPresentation>,
    ) -> Result<Self> {
        let images = source
            .generators()
            .iter()
            .map(|g| target.generator(&g.name))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<RingPresentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RingPresentation> {
        &self.target
    }

    pub fn images(&self) -> &[Series] {
        &self.images
    }

    /// Image of an element, reduced when the target is monic.
    pub fn apply(&self, x: &Series) -> Result<Series> {
        let y = x.compose_into(self.target.space(), &self.images)?;
        if self.target.is_monic() {
            self.target.monic_reduce(&y)
        } else {
            Ok(y)
        }
    }

    /// Whether the map hits the whole degree-`d` piece of the target.
    pub fn is_surjective_in_degree(&self, d: i64) -> Result<bool> {
        let tb = PieceBasis::new(self.target.space(), d)?;
        let mut rows = tb.relation_rows(&self.target.relation_elements());
        let one = Coefficient::one(self.source.ring());
        let sb = PieceBasis::new(self.source.space(), d)?;
        for m in sb.monomials() {
            let x = Series::monomial(self.source.space(), m.clone(), one.clone())?;
            rows.push(tb.sparse_vector(&self.apply(&x)?));
        }
        let report = cokernel(rows, tb.len(), d, self.target.ring().is_rational())?;
        Ok(report.is_zero())
    }

    /// Whether every source relation maps to zero. Needs a monic target.
    pub fn is_well_defined(&self) -> Result<bool> {
        if !self.target.is_monic() {
            return Err(Error::Strategy(
                "well-definedness is decided only for monic targets".into(),
            ));
        }
        for r in self.source.relation_elements() {
            if !self.apply(&r)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
