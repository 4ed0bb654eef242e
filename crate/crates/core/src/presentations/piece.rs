use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::linalg::{sparse_rank, SparseRow};
use super::snf::sparse_invariant_factors;
use super::RingPresentation;
use crate::algebra::{CoefficientRing, Exponents, Scalar, Series, SeriesSpace};
use crate::error::{Error, Result};

/// Abelian-group structure of one graded piece of a quotient ring.
///
/// Over integral rings `invariant_factors` lists the torsion orders followed
/// by one `0` per free summand, in divisibility order, and `rank` counts the
/// free summands. Over rational rings only `rank` is meaningful and the
/// factor list is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedPieceReport {
    pub degree: i64,
    #[serde(with = "bigints_as_strings")]
    pub invariant_factors: Vec<BigInt>,
    pub rank: u64,
    pub rational: bool,
}

mod bigints_as_strings {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(D::Error::custom))
            .collect()
    }
}

impl GradedPieceReport {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion().is_empty()
    }

    /// Orders of the cyclic torsion summands.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|x| !x.is_zero())
            .cloned()
            .collect()
    }

    /// The same group structure, ignoring the degree label.
    pub fn same_group(&self, other: &Self) -> bool {
        self.invariant_factors == other.invariant_factors
            && self.rank == other.rank
            && self.rational == other.rational
    }

    fn free(rank: u64, degree: i64, rational: bool) -> Self {
        GradedPieceReport {
            degree,
            invariant_factors: if rational {
                vec![]
            } else {
                vec![BigInt::zero(); rank as usize]
            },
            rank,
            rational,
        }
    }
}

impl fmt::Display for GradedPieceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let base = if self.rational { "ℚ" } else { "ℤ" };
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push(base.to_string()),
            r => parts.push(format!("{base}^{r}")),
        }
        parts.extend(self.torsion().iter().map(|t| format!("ℤ/{t}")));
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// How coefficients of a graded piece are reduced to scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Collapse {
    /// Keep monomials of weighted order exactly `d` and the constant part
    /// of their coefficients: exact for `ℤ`/`ℚ`, and the reduction along
    /// `tᵢ ↦ 0` for the Lazard ring.
    ConstantTerm,
    /// Keep every monomial up to the truncation and set `β = 1`: the
    /// degree-`d` piece over `ℤ[β,β⁻¹]` is spanned by `β^{k−d}·(order k)`.
    SumAll,
}

impl Collapse {
    pub(crate) fn for_ring(ring: CoefficientRing) -> Self {
        if ring.is_multiplicative() {
            Collapse::SumAll
        } else {
            Collapse::ConstantTerm
        }
    }
}

/// A ℤ- or ℚ-basis of one graded piece of the ambient series ring.
pub(crate) struct PieceBasis {
    space: std::sync::Arc<SeriesSpace>,
    degree: i64,
    collapse: Collapse,
    monomials: Vec<Exponents>,
    index: HashMap<Exponents, usize>,
}

impl PieceBasis {
    pub(crate) fn new(space: &std::sync::Arc<SeriesSpace>, degree: i64) -> Result<Self> {
        if degree > space.truncation() as i64 {
            return Err(Error::Truncation(format!(
                "degree {degree} exceeds the truncation {}",
                space.truncation()
            )));
        }
        let collapse = Collapse::for_ring(space.ring());
        let mut monomials = match collapse {
            Collapse::ConstantTerm if degree < 0 => vec![],
            Collapse::ConstantTerm => space.monomials_of_order(degree as u32),
            Collapse::SumAll => space.monomials_up_to(space.truncation()),
        };
        // Columns in ascending lex order keep fill-in low during elimination.
        monomials.reverse();
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(PieceBasis {
            space: space.clone(),
            degree,
            collapse,
            monomials,
            index,
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.monomials.len()
    }

    pub(crate) fn monomials(&self) -> &[Exponents] {
        &self.monomials
    }

    /// Coordinates of a homogeneous element of this degree.
    pub(crate) fn vector(&self, x: &Series) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.len()];
        for (e, c) in x.terms() {
            if let Some(&i) = self.index.get(e) {
                let s = match self.collapse {
                    Collapse::ConstantTerm => c.constant_term(),
                    Collapse::SumAll => c.scalar_sum(),
                };
                v[i] += &s;
            }
        }
        v
    }

    pub(crate) fn sparse_vector(&self, x: &Series) -> SparseRow<Scalar> {
        self.vector(x)
            .into_iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .collect()
    }

    /// Coordinates of all multiples `m·r` of the relations landing in this
    /// piece.
    pub(crate) fn relation_rows(&self, relations: &[Series]) -> Vec<SparseRow<Scalar>> {
        let one = crate::algebra::Coefficient::one(self.space.ring());
        let mut rows = Vec::new();
        for r in relations {
            let (Some(e), Some(lo)) = (r.degree(), r.min_order()) else {
                continue;
            };
            let multipliers = match self.collapse {
                Collapse::ConstantTerm => {
                    let k = self.degree - e;
                    if k < 0 || k > self.space.truncation() as i64 {
                        continue;
                    }
                    self.space.monomials_of_order(k as u32)
                }
                Collapse::SumAll => match self.space.truncation().checked_sub(lo) {
                    Some(k) => self.space.monomials_up_to(k),
                    None => continue,
                },
            };
            for m in multipliers {
                let v = self.sparse_vector(&r.mul_monomial(&m, &one));
                if !v.is_empty() {
                    rows.push(v);
                }
            }
        }
        rows
    }
}

fn integer_rows(rows: Vec<SparseRow<Scalar>>) -> Result<Vec<SparseRow<BigInt>>> {
    rows.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(c, s)| {
                    s.to_integer().map(|x| (c, x)).ok_or_else(|| {
                        Error::Structural(format!("non-integral entry {s} over an integral ring"))
                    })
                })
                .collect()
        })
        .collect()
}

pub(crate) fn rational_rows(
    rows: Vec<SparseRow<Scalar>>,
) -> Vec<SparseRow<num_rational::BigRational>> {
    rows.into_iter()
        .map(|r| {
            r.into_iter()
                .map(|(c, s)| (c, s.as_rational().clone()))
                .collect()
        })
        .collect()
}

/// Cokernel of the row span inside `ℤ^cols` (or `ℚ^cols`).
pub(crate) fn cokernel(
    rows: Vec<SparseRow<Scalar>>,
    cols: usize,
    degree: i64,
    rational: bool,
) -> Result<GradedPieceReport> {
    if rational {
        let rank = sparse_rank(rational_rows(rows));
        return Ok(GradedPieceReport::free((cols - rank) as u64, degree, true));
    }
    let factors = sparse_invariant_factors(integer_rows(rows)?, cols);
    let free = cols - factors.len();
    let mut out: Vec<BigInt> = factors.into_iter().filter(|x| !x.is_one()).collect();
    out.extend(std::iter::repeat_n(BigInt::zero(), free));
    Ok(GradedPieceReport {
        degree,
        invariant_factors: out,
        rank: free as u64,
        rational: false,
    })
}

/// The degree-`d` piece of the quotient ring as an abelian group (integral
/// rings) or its rank (rational rings).
///
/// Over the Lazard ring the rank is taken after `tᵢ ↦ 0`, which for a free
/// module over the coefficients equals its rank. Over `ℤ[β,β⁻¹]` every
/// graded piece is isomorphic to the whole truncated ring at `β = 1`.
pub fn graded_piece_snf(p: &RingPresentation, d: i64) -> Result<GradedPieceReport> {
    let basis = PieceBasis::new(p.space(), d)?;
    let rows = basis.relation_rows(&p.relation_elements());
    cokernel(rows, basis.len(), d, p.ring().is_rational())
}

/// Number of standard monomials in the degree-`d` piece basis: the rank the
/// piece has when the presentation is free over its free generators.
pub fn standard_piece_count(p: &RingPresentation, d: i64) -> Result<u64> {
    let basis = PieceBasis::new(p.space(), d)?;
    Ok(basis
        .monomials()
        .iter()
        .filter(|e| p.is_standard(e))
        .count() as u64)
}

/// Sum of the ranks of all pieces of degree `0..=D`.
pub fn total_rank(p: &RingPresentation) -> Result<u64> {
    (0..=p.truncation() as i64)
        .map(|d| graded_piece_snf(p, d).map(|r| r.rank))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{Generator, Relation};

    fn quotient(
        ring: CoefficientRing,
        rel: impl Fn(&Series) -> Series,
        d: u32,
    ) -> RingPresentation {
        let p = RingPresentation::new(ring, vec![Generator::series("ξ", 1)], vec![], d).unwrap();
        let xi = p.generator("ξ").unwrap();
        RingPresentation::from_space(
            p.space().clone(),
            p.kinds().to_vec(),
            vec![Relation::General(rel(&xi))],
        )
        .unwrap()
    }

    #[test]
    fn two_xi() {
        let p = quotient(CoefficientRing::IntegerAdditive, |x| x.scale_int(2), 4);
        assert_eq!(graded_piece_snf(&p, 0).unwrap().to_string(), "ℤ");
        for d in 1..=4 {
            let r = graded_piece_snf(&p, d).unwrap();
            assert_eq!(r.to_string(), "ℤ/2");
            assert_eq!(r.invariant_factors, vec![BigInt::from(2)]);
        }
        assert!(matches!(graded_piece_snf(&p, 5), Err(Error::Truncation(_))));
    }

    #[test]
    fn rational_pieces_are_free() {
        let p = quotient(CoefficientRing::RationalAdditive, |x| x.scale_int(2), 3);
        assert_eq!(graded_piece_snf(&p, 0).unwrap().rank, 1);
        assert!(graded_piece_snf(&p, 2).unwrap().is_zero());
        assert!(graded_piece_snf(&p, 2)
            .unwrap()
            .invariant_factors
            .is_empty());
    }

    #[test]
    fn periodic_two_series() {
        // 2ξ − βξ² over ℤ[β,β⁻¹]: at β = 1 the piece is ℤ[y]/(2y − y², y^{D+1}).
        let ring = CoefficientRing::LaurentMultiplicative;
        let beta = crate::algebra::Coefficient::generator(ring, 0).unwrap();
        let p = quotient(
            ring,
            |x| {
                x.scale_int(2)
                    .try_sub(&x.pow(2).scale(&beta).unwrap())
                    .unwrap()
            },
            3,
        );
        let r = graded_piece_snf(&p, 1).unwrap();
        assert_eq!(r.to_string(), "ℤ ⊕ ℤ/8");
        assert_eq!(
            graded_piece_snf(&p, -2).unwrap(),
            GradedPieceReport { degree: -2, ..r }
        );
    }

    #[test]
    fn report_serializes_factors_as_strings() {
        let r = GradedPieceReport {
            degree: 3,
            invariant_factors: vec![BigInt::from(2), BigInt::zero()],
            rank: 1,
            rational: false,
        };
        let j = serde_json::to_string(&r).unwrap();
        assert!(j.contains("[\"2\",\"0\"]"));
        assert_eq!(serde_json::from_str::<GradedPieceReport>(&j).unwrap(), r);
        assert_eq!(r.to_string(), "ℤ ⊕ ℤ/2");
    }
}
