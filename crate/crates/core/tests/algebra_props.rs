mod common;

use common::*;
use eqcob_core::algebra::{CoefficientMap, Series, SeriesSpace};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in values(12), b in values(12), c in values(12), ring in prop::sample::select(vec![L, Z, K])) {
        let s = SeriesSpace::with_names(ring, &["x", "y"], 3).unwrap();
        let (a, b, c) = (integer_series(&s, &a), integer_series(&s, &b), integer_series(&s, &c));
        prop_assert_eq!(a.try_add(&b).unwrap().try_add(&c).unwrap(), a.try_add(&b.try_add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&a).unwrap());
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            a.try_mul(&b).unwrap().try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.try_mul(&b).unwrap().try_mul(&c).unwrap(),
            a.try_mul(&b.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.try_sub(&a).unwrap().is_zero());
    }

    #[test]
    fn composition_is_associative(f in values(10), g in values(10), h in values(10)) {
        let s = SeriesSpace::univariate(L, "u", 5);
        let (f, g, h) = (degree_one(&s, f), degree_one(&s, g), degree_one(&s, h));
        let left = f.compose(std::slice::from_ref(&g)).unwrap().compose(std::slice::from_ref(&h)).unwrap();
        let right = f.compose(&[g.compose(&[h]).unwrap()]).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn reversion_is_an_involution(f in values(12), d in 2u32..=6) {
        let s = SeriesSpace::univariate(L, "u", d);
        let f = unit_linear(&s, f);
        let inv = f.reversion().unwrap();
        prop_assert_eq!(inv.reversion().unwrap(), f.clone());
        prop_assert_eq!(f.compose(&[inv]).unwrap(), Series::variable(&s, 0));
    }

    #[test]
    fn specialization_is_a_ring_morphism(a in values(16), b in values(16)) {
        let s = SeriesSpace::with_names(L, &["x", "y"], 3).unwrap();
        let (a, b) = (degree_one(&s, a), degree_one(&s, b));
        for map in [CoefficientMap::lazard_to_additive(3), CoefficientMap::lazard_to_multiplicative(3)] {
            let sum = a.try_add(&b).unwrap().specialize(&map).unwrap();
            prop_assert_eq!(sum, a.specialize(&map).unwrap().try_add(&b.specialize(&map).unwrap()).unwrap());
            let prod = a.try_mul(&b).unwrap().specialize(&map).unwrap();
            prop_assert_eq!(prod, a.specialize(&map).unwrap().try_mul(&b.specialize(&map).unwrap()).unwrap());
        }
    }

    #[test]
    fn operations_preserve_homogeneity(a in values(16), b in values(16), ring in prop::sample::select(vec![L, Z, K])) {
        let s = SeriesSpace::with_names(ring, &["x", "y"], 4).unwrap();
        let (a, b) = (degree_one(&s, a), degree_one(&s, b));
        prop_assert!(a.is_homogeneous_of(1));
        prop_assert!(a.try_add(&b).unwrap().is_homogeneous_of(1));
        prop_assert!(a.try_mul(&b).unwrap().is_homogeneous_of(2));
        prop_assert!(a.pow(3).is_homogeneous_of(3));
        let u = SeriesSpace::univariate(ring, "u", 4);
        let f = unit_linear(&u, vec![1, -2, 3]);
        prop_assert!(f.compose_into(&s, &[a]).unwrap().is_homogeneous_of(1));
    }

    #[test]
    fn series_documents_round_trip(a in values(16), ring in prop::sample::select(vec![L, Z, K])) {
        let s = SeriesSpace::with_names(ring, &["x", "y"], 3).unwrap();
        let a = degree_one(&s, a);
        let doc = a.to_doc();
        let json = serde_json::to_string(&doc).unwrap();
        let back = Series::from_doc(&serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn canonical_printing() {
    let s = SeriesSpace::with_names(Z, &["x", "y"], 3).unwrap();
    let x = Series::variable(&s, 0);
    let y = Series::variable(&s, 1);
    let e = x.try_add(&y).unwrap().pow(2).try_sub(&x.pow(3)).unwrap().try_add(&Series::from_int(&s, 4)).unwrap();
    assert_eq!(e.to_string(), "4 + x² + 2xy + y² - x³");
}
