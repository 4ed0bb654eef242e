#![allow(dead_code)]

use std::sync::Arc;

use eqcob_core::algebra::{Coefficient, CoefficientRing, Scalar, Series, SeriesSpace};
use eqcob_core::equivariant::sample_degree_one;
use proptest::prelude::*;

pub const L: CoefficientRing = CoefficientRing::LazardRational;
pub const Z: CoefficientRing = CoefficientRing::IntegerAdditive;
pub const K: CoefficientRing = CoefficientRing::LaurentMultiplicative;

/// A draw function cycling through `values`.
pub fn cycle(values: Vec<i64>) -> impl FnMut() -> i64 {
    let mut i = 0;
    move || {
        let v = values[i % values.len()];
        i += 1;
        v
    }
}

/// Homogeneous degree-1 element with zero constant term, from `values`.
pub fn degree_one(space: &Arc<SeriesSpace>, values: Vec<i64>) -> Series {
    sample_degree_one(space, &mut cycle(values)).unwrap()
}

/// Arbitrary element with integer scalar coefficients.
pub fn integer_series(space: &Arc<SeriesSpace>, values: &[i64]) -> Series {
    let monomials = space.monomials_up_to(space.truncation());
    let terms = monomials
        .into_iter()
        .zip(values.iter().cycle())
        .map(|(m, &v)| (m, Coefficient::from_int(space.ring(), v)));
    Series::from_terms(space, terms).unwrap()
}

/// A unit-linear single-variable series `u + Σ cₖ uᵏ` with coefficients of
/// degree `1 − k`, so the result is homogeneous of degree 1.
pub fn unit_linear(space: &Arc<SeriesSpace>, values: Vec<i64>) -> Series {
    let x = degree_one(space, values);
    let lin = x.coefficient(&[1]);
    let u = Series::variable(space, 0);
    x.try_sub(&Series::monomial(space, vec![1], lin).unwrap())
        .unwrap()
        .try_add(&u)
        .unwrap()
}

pub fn values(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-4i64..=4, len)
}

pub fn lazard_monomial(exps: Vec<i32>, s: i64) -> Coefficient {
    Coefficient::monomial(L, exps, Scalar::from_int(s)).unwrap()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}
