use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::json::SeriesDoc;
use crate::algebra::{Coefficient, CoefficientMap, CoefficientRing, Scalar, Series, SeriesSpace};
use crate::error::{Error, Result};

/// How a law was obtained; serialized alongside the series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawKind {
    Additive,
    Multiplicative,
    FromLogarithm,
    Conjugated,
    Specialized,
    Custom,
}

/// A truncated two-variable series `F(u, v)` over a coefficient ring,
/// optionally with its logarithm (only over rational rings).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalGroupLaw {
    kind: LawKind,
    series: Series,
    log: Option<Series>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawDoc {
    pub kind: LawKind,
    pub series: SeriesDoc,
    pub log: Option<SeriesDoc>,
}

/// The `(u, v)` space a law of truncation `d` lives in.
pub fn law_space(ring: CoefficientRing, d: u32) -> Arc<SeriesSpace> {
    SeriesSpace::with_names(ring, &["u", "v"], d).expect("distinct names")
}

/// `u + Σ_{i=1}^{d−1} tᵢ u^{i+1}` over `ℚ[t₁,t₂,…]`, homogeneous of degree 1.
pub fn universal_log(d: u32) -> Series {
    let ring = CoefficientRing::LazardRational;
    let space = SeriesSpace::univariate(ring, "u", d);
    let mut log = Series::variable(&space, 0);
    for i in 1..d {
        let ti = Coefficient::generator(ring, i as usize - 1).unwrap();
        log = log
            .try_add(&Series::variable(&space, 0).pow(i + 1).scale(&ti).unwrap())
            .unwrap();
    }
    log
}

/// `Σ_{k≥1} β^{k−1} u^k / k = −β⁻¹ ln(1 − βu)` over `ℚ[β,β⁻¹]`.
pub fn multiplicative_log(d: u32) -> Series {
    let ring = CoefficientRing::RationalMultiplicative;
    let space = SeriesSpace::univariate(ring, "u", d);
    let mut log = Series::zero(&space);
    for k in 1..=d {
        let c =
            Coefficient::monomial(ring, vec![k as i32 - 1], Scalar::ratio(1, k as i64)).unwrap();
        log = log
            .try_add(&Series::variable(&space, 0).pow(k).scale(&c).unwrap())
            .unwrap();
    }
    log
}

impl FormalGroupLaw {
    /// `F(u, v) = u + v`.
    pub fn additive(ring: CoefficientRing, d: u32) -> Result<Self> {
        if !ring.is_additive() {
            return Err(Error::Argument(format!(
                "the additive law needs an additive coefficient ring, got {}",
                ring.label()
            )));
        }
        let space = law_space(ring, d);
        let series = Series::variable(&space, 0).try_add(&Series::variable(&space, 1))?;
        let log = ring
            .is_rational()
            .then(|| Series::variable(&SeriesSpace::univariate(ring, "u", d), 0));
        Ok(FormalGroupLaw {
            kind: LawKind::Additive,
            series,
            log,
        })
    }

    /// `F(u, v) = u + v − βuv`.
    pub fn multiplicative(ring: CoefficientRing, d: u32) -> Result<Self> {
        if !ring.is_multiplicative() {
            return Err(Error::Argument(format!(
                "the multiplicative law needs ℤ[β,β⁻¹] or ℚ[β,β⁻¹], got {}",
                ring.label()
            )));
        }
        let space = law_space(ring, d);
        let u = Series::variable(&space, 0);
        let v = Series::variable(&space, 1);
        let beta = Coefficient::generator(ring, 0)?;
        let series = u.try_add(&v)?.try_sub(&u.try_mul(&v)?.scale(&beta)?)?;
        let log = ring.is_rational().then(|| multiplicative_log(d));
        Ok(FormalGroupLaw {
            kind: LawKind::Multiplicative,
            series,
            log,
        })
    }

    /// `F(u, v) = exp(log u + log v)` with `exp` the reversion of `log`.
    pub fn from_log(log: &Series) -> Result<Self> {
        if log.space().arity() != 1 {
            return Err(Error::Structural(
                "a logarithm is a single-variable series".into(),
            ));
        }
        if !log.ring().is_rational() {
            return Err(Error::Argument(
                "logarithms need a rational coefficient ring".into(),
            ));
        }
        if !log.coefficient(&[1]).is_one() {
            return Err(Error::Reversion(
                "logarithm must have linear coefficient 1".into(),
            ));
        }
        let exp = log.reversion()?;
        let space = law_space(log.ring(), log.truncation());
        let u = Series::variable(&space, 0);
        let v = Series::variable(&space, 1);
        let sum = log.compose(&[u])?.try_add(&log.compose(&[v])?)?;
        let series = exp.compose(&[sum])?;
        let log = log.relabel(&SeriesSpace::univariate(log.ring(), "u", log.truncation()))?;
        Ok(FormalGroupLaw {
            kind: LawKind::FromLogarithm,
            series,
            log: Some(log),
        })
    }

    /// The universal law over `ℚ[t₁,t₂,…]` at truncation `d`.
    pub fn universal(d: u32) -> Result<Self> {
        Self::from_log(&universal_log(d))
    }

    /// Wraps an arbitrary two-variable series without checking the axioms;
    /// see [`FormalGroupLaw::verify_axioms`].
    pub fn from_series(series: Series, log: Option<Series>) -> Result<Self> {
        if series.space().arity() != 2 {
            return Err(Error::Structural(
                "a formal group law is a two-variable series".into(),
            ));
        }
        Ok(FormalGroupLaw {
            kind: LawKind::Custom,
            series,
            log,
        })
    }

    pub fn kind(&self) -> LawKind {
        self.kind
    }

    pub fn series(&self) -> &Series {
        &self.series
    }

    pub fn log(&self) -> Option<&Series> {
        self.log.as_ref()
    }

    pub fn exp(&self) -> Option<Result<Series>> {
        self.log.as_ref().map(Series::reversion)
    }

    pub fn ring(&self) -> CoefficientRing {
        self.series.ring()
    }

    pub fn truncation(&self) -> u32 {
        self.series.truncation()
    }

    /// `F(a, b)`: the first Chern class of a tensor product.
    pub fn sum(&self, a: &Series, b: &Series) -> Result<Series> {
        self.series.compose(&[a.clone(), b.clone()])
    }

    /// Single-variable space in `t` used by the inverse and n-series.
    pub fn series_space(&self) -> Arc<SeriesSpace> {
        SeriesSpace::univariate(self.ring(), "t", self.truncation())
    }

    /// `ι(t)` with `F(t, ι(t)) = 0`, solved order by order.
    pub fn formal_inverse(&self) -> Result<Series> {
        let space = self.series_space();
        let t = Series::variable(&space, 0);
        let mut inv = t.neg();
        // F(t, ι + δtᵏ) = F(t, ι) + δtᵏ + (order > k)
        for k in 2..=self.truncation() {
            let err = self.sum(&t, &inv)?.coefficient(&[k]);
            if !err.is_zero() {
                inv = inv.try_sub(&Series::monomial(&space, vec![k], err)?)?;
            }
        }
        Ok(inv)
    }

    /// `[n](t)`; see [`NSeries`] to reuse intermediate values.
    pub fn n_series(&self, n: i64) -> Result<Series> {
        NSeries::new(self)?.get(n)
    }

    /// `F^φ(u, v) = φ(F(φ⁻¹(u), φ⁻¹(v)))`. If `F` has a logarithm `L`, the
    /// result has logarithm `L ∘ φ⁻¹`.
    pub fn conjugate(&self, phi: &Series) -> Result<Self> {
        if phi.space().arity() != 1 {
            return Err(Error::Structural(
                "conjugation needs a single-variable series".into(),
            ));
        }
        if phi.ring() != self.ring() || phi.truncation() != self.truncation() {
            return Err(Error::Structural(
                "conjugating series must share ring and truncation".into(),
            ));
        }
        let inv = phi.reversion()?;
        let space = self.series.space().clone();
        let u = Series::variable(&space, 0);
        let v = Series::variable(&space, 1);
        let inner = self.series.compose(&[
            inv.compose_into(&space, &[u])?,
            inv.compose_into(&space, &[v])?,
        ])?;
        let series = phi.compose_into(&space, &[inner])?;
        let log = match &self.log {
            Some(l) => Some(l.compose(&[inv.relabel(l.space())?])?),
            None => None,
        };
        Ok(FormalGroupLaw {
            kind: LawKind::Conjugated,
            series,
            log,
        })
    }

    /// Applies a coefficient-ring morphism to the law and its logarithm.
    pub fn specialize(&self, map: &CoefficientMap) -> Result<Self> {
        let series = self.series.specialize(map)?;
        let log = match &self.log {
            Some(l) if map.target().is_rational() => Some(l.specialize(map)?),
            _ => None,
        };
        Ok(FormalGroupLaw {
            kind: LawKind::Specialized,
            series,
            log,
        })
    }

    pub fn to_doc(&self) -> LawDoc {
        LawDoc {
            kind: self.kind,
            series: self.series.to_doc(),
            log: self.log.as_ref().map(Series::to_doc),
        }
    }

    pub fn from_doc(doc: &LawDoc) -> Result<Self> {
        let series = Series::from_doc(&doc.series)?;
        let log = doc.log.as_ref().map(Series::from_doc).transpose()?;
        let mut law = Self::from_series(series, log)?;
        law.kind = doc.kind;
        Ok(law)
    }
}

/// Memo of `[k](t)` for one law. Values depend only on the law, so a table
/// may be cloned or rebuilt freely.
#[derive(Clone, Debug)]
pub struct NSeries<'a> {
    law: &'a FormalGroupLaw,
    t: Series,
    inverse: Series,
    positive: Vec<Series>,
}

impl<'a> NSeries<'a> {
    pub fn new(law: &'a FormalGroupLaw) -> Result<Self> {
        let space = law.series_space();
        Ok(NSeries {
            law,
            t: Series::variable(&space, 0),
            inverse: law.formal_inverse()?,
            positive: vec![Series::zero(&space)],
        })
    }

    /// `[0] = 0`, `[n] = F(t, [n−1])`, `[−n] = [n] ∘ ι`.
    pub fn get(&mut self, n: i64) -> Result<Series> {
        let m = n.unsigned_abs() as usize;
        while self.positive.len() <= m {
            let next = self.law.sum(&self.t, self.positive.last().unwrap())?;
            self.positive.push(next);
        }
        if n >= 0 {
            Ok(self.positive[m].clone())
        } else {
            self.positive[m].compose(std::slice::from_ref(&self.inverse))
        }
    }

    pub fn inverse(&self) -> &Series {
        &self.inverse
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const L: CoefficientRing = CoefficientRing::LazardRational;
    const Z: CoefficientRing = CoefficientRing::IntegerAdditive;
    const K: CoefficientRing = CoefficientRing::LaurentMultiplicative;

    fn lt(i: usize) -> Coefficient {
        Coefficient::generator(L, i - 1).unwrap()
    }

    #[test]
    fn additive_examples() {
        let f = FormalGroupLaw::additive(Z, 5).unwrap();
        assert_eq!(f.series().to_string(), "u + v");
        assert!(f.log().is_none());
        let t3 = f.n_series(3).unwrap();
        assert_eq!(t3.to_string(), "3t");
        assert_eq!(f.n_series(7).unwrap().to_string(), "7t");
        assert_eq!(f.formal_inverse().unwrap().to_string(), "-t");
        assert!(FormalGroupLaw::additive(K, 3).is_err());
    }

    #[test]
    fn multiplicative_examples() {
        let f = FormalGroupLaw::multiplicative(K, 3).unwrap();
        assert_eq!(f.series().to_string(), "u + v - βuv");
        assert_eq!(f.formal_inverse().unwrap().to_string(), "-t - βt² - β²t³");
        assert_eq!(f.n_series(2).unwrap().to_string(), "2t - βt²");
        assert_eq!(f.n_series(3).unwrap().to_string(), "3t - 3βt² + β²t³");
        let q = FormalGroupLaw::multiplicative(CoefficientRing::RationalMultiplicative, 3).unwrap();
        assert_eq!(q.log().unwrap().to_string(), "u + (1/2)βu² + (1/3)β²u³");
    }

    #[test]
    fn sum_examples() {
        let f = FormalGroupLaw::multiplicative(K, 3).unwrap();
        let space = SeriesSpace::with_names(K, &["x", "y"], 3).unwrap();
        let x = Series::variable(&space, 0);
        assert_eq!(f.sum(&x, &x).unwrap().to_string(), "2x - βx²");
        assert_eq!(f.sum(&x, &Series::zero(&space)).unwrap(), x);
        let a = FormalGroupLaw::additive(Z, 3).unwrap();
        let zs = SeriesSpace::with_names(Z, &["x", "y"], 3).unwrap();
        let s = a
            .sum(&Series::variable(&zs, 0), &Series::variable(&zs, 1))
            .unwrap();
        assert_eq!(s.to_string(), "x + y");
    }

    #[test]
    fn from_log_order_three() {
        let space = SeriesSpace::univariate(L, "u", 3);
        let u = Series::variable(&space, 0);
        let log = u
            .try_add(&u.pow(2).scale(&lt(1)).unwrap())
            .unwrap()
            .try_add(&u.pow(3).scale(&lt(2)).unwrap())
            .unwrap();
        let f = FormalGroupLaw::from_log(&log).unwrap();
        assert_eq!(
            f.series().to_string(),
            "u + v - 2t₁uv + (4t₁² - 3t₂)u²v + (4t₁² - 3t₂)uv²"
        );
        assert_eq!(f.log(), Some(&log));
    }

    #[test]
    fn trivial_log_gives_additive() {
        let q = CoefficientRing::RationalAdditive;
        let log = Series::variable(&SeriesSpace::univariate(q, "u", 4), 0);
        let f = FormalGroupLaw::from_log(&log).unwrap();
        assert_eq!(f.series(), FormalGroupLaw::additive(q, 4).unwrap().series());
    }

    #[test]
    fn non_unit_log_is_rejected() {
        let q = CoefficientRing::RationalAdditive;
        let log = Series::variable(&SeriesSpace::univariate(q, "u", 4), 0).scale_int(2);
        assert!(matches!(
            FormalGroupLaw::from_log(&log),
            Err(Error::Reversion(_))
        ));
    }

    #[test]
    fn negative_n_series() {
        let f = FormalGroupLaw::universal(4).unwrap();
        let mut table = NSeries::new(&f).unwrap();
        assert_eq!(table.get(-1).unwrap(), f.formal_inverse().unwrap());
        let t = Series::variable(&f.series_space(), 0);
        assert!(f.sum(&t, &table.get(-1).unwrap()).unwrap().is_zero());
        assert!(table.get(0).unwrap().is_zero());
    }

    #[test]
    fn identity_conjugation() {
        let f = FormalGroupLaw::universal(4).unwrap();
        let u = Series::variable(&SeriesSpace::univariate(L, "u", 4), 0);
        let g = f.conjugate(&u).unwrap();
        assert_eq!(g.series(), f.series());
        assert_eq!(g.log(), f.log());
    }

    #[test]
    fn linear_rescale_fixes_additive() {
        let q = CoefficientRing::RationalAdditive;
        let f = FormalGroupLaw::additive(q, 4).unwrap();
        let phi = Series::variable(&SeriesSpace::univariate(q, "u", 4), 0).scale_int(5);
        assert_eq!(f.conjugate(&phi).unwrap().series(), f.series());
    }

    #[test]
    fn law_doc_round_trip() {
        let f = FormalGroupLaw::universal(3).unwrap();
        let back = FormalGroupLaw::from_doc(&f.to_doc()).unwrap();
        assert_eq!(back, f);
    }
}
