//! Structured (serde) forms of coefficients and series.
//!
//! Scalars are decimal strings so arbitrary precision survives any JSON
//! reader; term arrays follow the canonical print order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{
    Coefficient, CoefficientExponents, CoefficientRing, Exponents, Scalar, Series, SeriesSpace,
    Variable,
};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTermDoc {
    pub exponents: CoefficientExponents,
    pub scalar: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermDoc {
    pub exponents: Exponents,
    pub coefficient: Vec<CoefficientTermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    pub ring: CoefficientRing,
    pub variables: Vec<Variable>,
    pub truncation: u32,
    pub terms: Vec<SeriesTermDoc>,
    /// Canonical text form, for readers that do not want to rebuild terms.
    pub text: String,
}

pub fn coefficient_doc(c: &Coefficient) -> Vec<CoefficientTermDoc> {
    c.sorted_terms()
        .into_iter()
        .map(|(e, s)| CoefficientTermDoc {
            exponents: e.clone(),
            scalar: s.to_string(),
        })
        .collect()
}

pub fn coefficient_from_doc(
    ring: CoefficientRing,
    doc: &[CoefficientTermDoc],
) -> Result<Coefficient> {
    let terms = doc
        .iter()
        .map(|t| {
            let s: Scalar = t
                .scalar
                .parse()
                .map_err(|e: super::scalar::ParseScalarError| Error::Argument(e.to_string()))?;
            Ok((t.exponents.clone(), s))
        })
        .collect::<Result<Vec<_>>>()?;
    Coefficient::from_terms(ring, terms)
}

impl Series {
    pub fn to_doc(&self) -> SeriesDoc {
        SeriesDoc {
            ring: self.ring(),
            variables: self.space().variables().to_vec(),
            truncation: self.truncation(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| SeriesTermDoc {
                    exponents: e.clone(),
                    coefficient: coefficient_doc(c),
                })
                .collect(),
            text: self.to_string(),
        }
    }

    pub fn from_doc(doc: &SeriesDoc) -> Result<Series> {
        let space: Arc<SeriesSpace> =
            SeriesSpace::new(doc.ring, doc.variables.clone(), doc.truncation)?;
        let terms = doc
            .terms
            .iter()
            .map(|t| {
                Ok((
                    t.exponents.clone(),
                    coefficient_from_doc(doc.ring, &t.coefficient)?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Series::from_terms(&space, terms)
    }
}
