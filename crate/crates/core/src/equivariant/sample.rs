use std::sync::Arc;

use crate::algebra::{Coefficient, CoefficientRing, Scalar, Series, SeriesSpace};
use crate::error::Result;

/// A coefficient of degree `-k` built from two integers.
fn coefficient_of_degree(ring: CoefficientRing, k: u32, a: i64, b: i64) -> Result<Coefficient> {
    if k == 0 {
        return Ok(Coefficient::from_int(ring, a));
    }
    match ring {
        CoefficientRing::LazardRational => {
            let mut single = vec![0; k as usize];
            single[k as usize - 1] = 1;
            let mut power = vec![0; k as usize];
            power[0] = k as i32;
            Coefficient::from_terms(
                ring,
                [(single, Scalar::from_int(a)), (power, Scalar::from_int(b))],
            )
        }
        CoefficientRing::LaurentMultiplicative | CoefficientRing::RationalMultiplicative => {
            Coefficient::monomial(ring, vec![k as i32], Scalar::from_int(a))
        }
        CoefficientRing::IntegerAdditive | CoefficientRing::RationalAdditive => {
            Ok(Coefficient::zero(ring))
        }
    }
}

/// A homogeneous degree-1 element with zero constant term. Integer inputs
/// come from `draw`; every monomial of order `k` gets a coefficient of
/// degree `1 − k` when the ring has one.
pub fn sample_degree_one(
    space: &Arc<SeriesSpace>,
    draw: &mut impl FnMut() -> i64,
) -> Result<Series> {
    let mut out = Series::zero(space);
    for k in 1..=space.truncation() {
        for m in space.monomials_of_order(k) {
            let c = coefficient_of_degree(space.ring(), k - 1, draw(), draw())?;
            out = out.try_add(&Series::monomial(space, m, c)?)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_degree_one() {
        for ring in [
            CoefficientRing::LazardRational,
            CoefficientRing::IntegerAdditive,
            CoefficientRing::LaurentMultiplicative,
        ] {
            let s = SeriesSpace::with_names(ring, &["a", "b"], 3).unwrap();
            let mut k = 0;
            let x = sample_degree_one(&s, &mut || {
                k += 1;
                k % 5 - 2
            })
            .unwrap();
            assert!(x.is_homogeneous_of(1), "{x}");
            assert!(x.constant_term().is_zero());
            assert!(!x.is_zero());
        }
    }
}
