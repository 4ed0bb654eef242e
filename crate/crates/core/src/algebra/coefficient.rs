use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::ring::superscript;
use super::{CoefficientRing, Scalar};
use crate::error::{Error, Result};

/// Exponents over the coefficient ring's generators, trailing zeros trimmed.
pub type CoefficientExponents = Vec<i32>;

/// Sparse element of a coefficient ring.
///
/// Zero scalars are never stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coefficient {
    ring: CoefficientRing,
    terms: BTreeMap<CoefficientExponents, Scalar>,
}

fn trim(mut exps: CoefficientExponents) -> CoefficientExponents {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

fn check_exponents(ring: CoefficientRing, exps: &[i32]) -> Result<()> {
    for (i, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !ring.has_generator(i) {
            return Err(Error::Structural(format!(
                "{} has no coefficient generator #{}",
                ring.label(),
                i + 1
            )));
        }
        if e < 0 && !ring.generator_invertible(i) {
            return Err(Error::Structural(format!(
                "negative exponent on non-invertible generator {}",
                ring.generator_name(i)
            )));
        }
    }
    Ok(())
}

fn check_scalar(ring: CoefficientRing, s: &Scalar) -> Result<()> {
    if ring.is_integral() && !s.is_integer() {
        return Err(Error::Structural(format!(
            "non-integral scalar {s} in {}",
            ring.label()
        )));
    }
    Ok(())
}

fn add_exps(a: &[i32], b: &[i32]) -> CoefficientExponents {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect();
    trim(out)
}

impl Coefficient {
    pub fn zero(ring: CoefficientRing) -> Self {
        Coefficient {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: CoefficientRing) -> Self {
        Self::from_scalar_unchecked(ring, Scalar::one())
    }

    fn from_scalar_unchecked(ring: CoefficientRing, s: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(Vec::new(), s);
        }
        Coefficient { ring, terms }
    }

    pub fn from_int(ring: CoefficientRing, n: i64) -> Self {
        Self::from_scalar_unchecked(ring, Scalar::from_int(n))
    }

    pub fn scalar(ring: CoefficientRing, s: Scalar) -> Result<Self> {
        check_scalar(ring, &s)?;
        Ok(Self::from_scalar_unchecked(ring, s))
    }

    /// The generator with 0-based `index` (`t_{index+1}` or `β`).
    pub fn generator(ring: CoefficientRing, index: usize) -> Result<Self> {
        let mut exps = vec![0; index + 1];
        exps[index] = 1;
        Self::monomial(ring, exps, Scalar::one())
    }

    pub fn monomial(ring: CoefficientRing, exps: CoefficientExponents, s: Scalar) -> Result<Self> {
        Self::from_terms(ring, [(exps, s)])
    }

    pub fn from_terms(
        ring: CoefficientRing,
        terms: impl IntoIterator<Item = (CoefficientExponents, Scalar)>,
    ) -> Result<Self> {
        let mut out = Coefficient::zero(ring);
        for (exps, s) in terms {
            check_exponents(ring, &exps)?;
            check_scalar(ring, &s)?;
            out.add_term(trim(exps), &s);
        }
        Ok(out)
    }

    fn add_term(&mut self, exps: CoefficientExponents, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(s.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += s;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoefficientExponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(Scalar::is_one)
    }

    /// The scalar multiplying the empty monomial.
    pub fn constant_term(&self) -> Scalar {
        self.terms
            .get(&Vec::new())
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Sum of all scalars, i.e. the image under every generator ↦ 1.
    pub fn scalar_sum(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for s in self.terms.values() {
            acc += s;
        }
        acc
    }

    pub fn monomial_degree(ring: CoefficientRing, exps: &[i32]) -> i64 {
        exps.iter()
            .enumerate()
            .map(|(i, &e)| e as i64 * ring.generator_degree(i))
            .sum()
    }

    /// Degree if nonzero and homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut degrees = self
            .terms
            .keys()
            .map(|e| Self::monomial_degree(self.ring, e));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous_of(&self, degree: i64) -> bool {
        self.terms
            .keys()
            .all(|e| Self::monomial_degree(self.ring, e) == degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Structural(format!(
                "coefficient rings differ: {} vs {}",
                self.ring.label(),
                other.ring.label()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.mul(other))
    }

    // The infallible forms assume equal rings; callers in this crate check
    // rings once at the series level.
    pub(crate) fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (e, s) in &other.terms {
            out.add_term(e.clone(), s);
        }
        out
    }

    #[cfg(test)]
    pub(crate) fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = self.clone();
        for (e, s) in &other.terms {
            out.add_term(e.clone(), &-s);
        }
        out
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = Coefficient::zero(self.ring);
        for (ea, sa) in &self.terms {
            for (eb, sb) in &other.terms {
                out.add_term(add_exps(ea, eb), &(sa * sb));
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Coefficient {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, s)| (e.clone(), -s)).collect(),
        }
    }

    /// Multiplies by a scalar, which must belong to the ring.
    pub fn scale(&self, s: &Scalar) -> Result<Self> {
        check_scalar(self.ring, s)?;
        Ok(self.scale_unchecked(s))
    }

    pub(crate) fn scale_unchecked(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Coefficient::zero(self.ring);
        }
        Coefficient {
            ring: self.ring,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * s)).collect(),
        }
    }

    /// A unit is a single monomial whose scalar is a unit and whose
    /// generators are all invertible.
    pub fn is_unit(&self) -> bool {
        if self.terms.len() != 1 {
            return false;
        }
        let (exps, s) = self.terms.iter().next().unwrap();
        self.ring.scalar_is_unit(s)
            && exps
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || self.ring.generator_invertible(i))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (exps, s) = self.terms.iter().next().unwrap();
        let inv_exps = exps.iter().map(|e| -e).collect();
        Some(Coefficient {
            ring: self.ring,
            terms: [(inv_exps, s.recip()?)].into_iter().collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Coefficient::one(self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reinterprets the same terms in another ring (e.g. `ℤ → ℚ`).
    pub fn change_ring(&self, ring: CoefficientRing) -> Result<Self> {
        Self::from_terms(ring, self.terms.iter().map(|(e, s)| (e.clone(), s.clone())))
    }

    /// Terms in canonical print order: by absolute degree, then exponents
    /// in descending lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&CoefficientExponents, &Scalar)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|(a, _), (b, _)| {
            let da = Self::monomial_degree(self.ring, a).abs();
            let db = Self::monomial_degree(self.ring, b).abs();
            da.cmp(&db).then_with(|| cmp_exps_desc(a, b))
        });
        out
    }

    /// Renders a monomial such as `t₁²t₂` or `β⁻¹`; empty for the unit monomial.
    pub fn monomial_text(ring: CoefficientRing, exps: &[i32]) -> String {
        let mut out = String::new();
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            out.push_str(&ring.generator_name(i));
            if e != 1 {
                out.push_str(&superscript(e as i64));
            }
        }
        out
    }
}

fn cmp_exps_desc(a: &[i32], b: &[i32]) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        if x != y {
            return y.cmp(&x);
        }
    }
    Ordering::Equal
}

/// Writes `scalar·monomial` with its sign split off; `leading` controls
/// whether a `+` is emitted.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    s: &Scalar,
    body: &str,
    leading: bool,
) -> fmt::Result {
    let negative = s.is_negative();
    match (leading, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mag = s.abs();
    if body.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        f.write_str(body)
    } else if mag.is_integer() {
        write!(f, "{mag}{body}")
    } else {
        write!(f, "({mag}){body}")
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exps, s)) in self.sorted_terms().into_iter().enumerate() {
            write_signed_term(f, s, &Self::monomial_text(self.ring, exps), i == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const L: CoefficientRing = CoefficientRing::LazardRational;
    const K: CoefficientRing = CoefficientRing::LaurentMultiplicative;

    fn t(i: usize) -> Coefficient {
        Coefficient::generator(L, i - 1).unwrap()
    }

    #[test]
    fn degrees_follow_generators() {
        let x = t(1).mul(&t(2));
        assert_eq!(x.degree(), Some(-3));
        let y = t(1).mul(&t(1)).add(&t(2));
        assert_eq!(y.degree(), Some(-2));
        assert!(!t(1).add(&t(2)).is_homogeneous());
        assert!(Coefficient::zero(L).is_homogeneous());
    }

    #[test]
    fn zero_terms_are_dropped() {
        let x = t(1).sub(&t(1));
        assert!(x.is_zero());
        assert_eq!(x, Coefficient::zero(L));
    }

    #[test]
    fn integral_rings_reject_fractions() {
        assert!(Coefficient::scalar(K, Scalar::ratio(1, 2)).is_err());
        assert!(
            Coefficient::scalar(CoefficientRing::RationalMultiplicative, Scalar::ratio(1, 2))
                .is_ok()
        );
    }

    #[test]
    fn only_beta_inverts() {
        assert!(Coefficient::monomial(K, vec![-2], Scalar::one()).is_ok());
        assert!(Coefficient::monomial(L, vec![-1], Scalar::one()).is_err());
        assert!(Coefficient::generator(CoefficientRing::IntegerAdditive, 0).is_err());
        let beta = Coefficient::generator(K, 0).unwrap();
        let inv = beta.inverse().unwrap();
        assert!(beta.mul(&inv).is_one());
        assert_eq!(inv.to_string(), "β⁻¹");
        assert!(t(1).inverse().is_none());
        assert!(Coefficient::from_int(K, 2).inverse().is_none());
        assert_eq!(
            Coefficient::from_int(CoefficientRing::RationalAdditive, 2).inverse(),
            Some(
                Coefficient::scalar(CoefficientRing::RationalAdditive, Scalar::ratio(1, 2))
                    .unwrap()
            )
        );
    }

    #[test]
    fn display() {
        let x = t(1)
            .mul(&t(1))
            .scale(&Scalar::from_int(4))
            .unwrap()
            .sub(&t(2).scale(&Scalar::from_int(3)).unwrap());
        assert_eq!(x.to_string(), "4t₁² - 3t₂");
        let half =
            Coefficient::scalar(CoefficientRing::RationalMultiplicative, Scalar::ratio(1, 2))
                .unwrap();
        let b = Coefficient::generator(CoefficientRing::RationalMultiplicative, 0).unwrap();
        assert_eq!(half.mul(&b).to_string(), "(1/2)β");
        assert_eq!(Coefficient::from_int(L, -3).to_string(), "-3");
    }
}
