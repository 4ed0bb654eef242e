mod common;

use common::*;
use eqcob_core::algebra::{Coefficient, CoefficientRing, Scalar, Series, SeriesSpace};
use eqcob_core::equivariant::{specialize_law, Theory};
use eqcob_core::fgl::{law_space, twist, FormalGroupLaw, NSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn theory() -> impl Strategy<Value = Theory> {
    prop::sample::select(Theory::ALL.to_vec())
}

/// `(1 − (1 − βt)ⁿ)/β` expanded with generalized binomial coefficients.
fn multiplicative_n_series_oracle(n: i64, d: u32) -> Series {
    let s = SeriesSpace::univariate(K, "t", d);
    let mut binom = BigRational::from_integer(BigInt::from(1));
    let mut out = Series::zero(&s);
    for k in 1..=d as i64 {
        binom = binom * BigRational::from_integer(BigInt::from(n - k + 1)) / BigRational::from_integer(BigInt::from(k));
        // −C(n,k)(−β)ᵏ/β = (−1)^{k+1} C(n,k) β^{k−1}
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let s_k = Scalar::from_rational(binom.clone() * BigRational::from_integer(BigInt::from(sign)));
        let c = Coefficient::monomial(K, vec![k as i32 - 1], s_k).unwrap();
        out = out.try_add(&Series::monomial(&s, vec![k as u32], c).unwrap()).unwrap();
    }
    out
}

/// `exp(n · log t)` for a law with a logarithm.
fn log_n_series_oracle(law: &FormalGroupLaw, n: i64) -> Series {
    let log = law.log().unwrap();
    let exp = log.reversion().unwrap();
    let t = Series::variable(&law.series_space(), 0);
    let scaled = log.compose_into(t.space(), std::slice::from_ref(&t)).unwrap().scale_int(n);
    exp.compose_into(t.space(), &[scaled]).unwrap()
}

fn random_log(d: u32, values: Vec<i64>) -> Series {
    unit_linear(&SeriesSpace::univariate(L, "u", d), values)
}

#[test]
fn universal_values() {
    let f = FormalGroupLaw::universal(3).unwrap();
    assert_eq!(f.formal_inverse().unwrap().to_string(), "-t - 2t₁t² - 4t₁²t³");
    assert_eq!(f.n_series(2).unwrap().to_string(), "2t - 2t₁t² + (8t₁² - 6t₂)t³");
    assert_eq!(f.exp().unwrap().unwrap().to_string(), "u - t₁u² + (2t₁² - t₂)u³");
}

#[test]
fn ktheory_n_series_matches_the_binomial_oracle() {
    for d in 1..=6 {
        let f = FormalGroupLaw::multiplicative(K, d).unwrap();
        let mut table = NSeries::new(&f).unwrap();
        for n in -5..=5 {
            assert_eq!(table.get(n).unwrap(), multiplicative_n_series_oracle(n, d), "n = {n}, D = {d}");
        }
    }
}

#[test]
fn universal_n_series_matches_the_log_oracle() {
    let f = FormalGroupLaw::universal(6).unwrap();
    let mut table = NSeries::new(&f).unwrap();
    for n in -4..=4 {
        assert_eq!(table.get(n).unwrap(), log_n_series_oracle(&f, n), "n = {n}");
    }
    let neg = log_n_series_oracle(&f, -1);
    assert_eq!(f.formal_inverse().unwrap(), neg);
}

#[test]
fn built_in_laws_satisfy_the_axioms() {
    for d in 1..=8 {
        assert!(FormalGroupLaw::additive(Z, d).unwrap().verify_axioms().unwrap().all_passed());
        assert!(FormalGroupLaw::multiplicative(K, d).unwrap().verify_axioms().unwrap().all_passed());
        assert!(FormalGroupLaw::universal(d).unwrap().verify_axioms().unwrap().all_passed(), "D = {d}");
    }
}

#[test]
fn conjugating_the_additive_law_by_exp() {
    for d in 1..=6 {
        let universal = FormalGroupLaw::universal(d).unwrap();
        let exp = universal.exp().unwrap().unwrap();
        let space = law_space(L, d);
        let sum = Series::variable(&space, 0).try_add(&Series::variable(&space, 1)).unwrap();
        let unit = Series::variable(&SeriesSpace::univariate(L, "u", d), 0);
        let additive = FormalGroupLaw::from_series(sum, Some(unit)).unwrap();
        let g = additive.conjugate(&exp).unwrap();
        assert_eq!(g.series(), universal.series(), "D = {d}");
        assert_eq!(g.log(), universal.log(), "D = {d}");
    }
}

#[test]
fn specialization_coherence() {
    for d in 1..=6 {
        let universal = FormalGroupLaw::universal(d).unwrap();
        let chow = specialize_law(&universal, Theory::Chow).unwrap();
        let additive = FormalGroupLaw::additive(CoefficientRing::RationalAdditive, d).unwrap();
        assert_eq!(chow.series(), additive.series(), "D = {d}");
        let k = specialize_law(&universal, Theory::KTheory).unwrap();
        let mult = FormalGroupLaw::multiplicative(CoefficientRing::RationalMultiplicative, d).unwrap();
        assert_eq!(k.series(), mult.series(), "D = {d}");
        assert_eq!(k.log(), mult.log(), "D = {d}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn laws_from_random_logs_are_laws(v in values(12), d in 1u32..=6) {
        let log = random_log(d, v);
        let f = FormalGroupLaw::from_log(&log).unwrap();
        let report = f.verify_axioms().unwrap();
        prop_assert!(report.all_passed(), "{}", report);
        let exp = f.exp().unwrap().unwrap();
        let u = Series::variable(log.space(), 0);
        prop_assert_eq!(exp.compose(std::slice::from_ref(&log)).unwrap(), u.clone());
        prop_assert_eq!(log.compose(&[exp]).unwrap(), u);
    }

    #[test]
    fn conjugates_and_twists_are_laws(v in values(12), tau in values(4), d in 1u32..=5, th in theory()) {
        let law = th.law(d).unwrap();
        let phi = unit_linear(&SeriesSpace::univariate(law.ring(), "u", d), v);
        let g = law.conjugate(&phi).unwrap();
        prop_assert!(g.verify_axioms().unwrap().all_passed());
        if th != Theory::Chow {
            let ring = law.ring();
            let coeffs: Vec<Coefficient> = tau
                .iter()
                .enumerate()
                .map(|(i, &a)| if i == 0 {
                    Coefficient::one(ring)
                } else {
                    Coefficient::monomial(ring, vec![i as i32], Scalar::from_int(a)).unwrap()
                })
                .collect();
            prop_assert!(twist(&law, &coeffs).unwrap().verify_axioms().unwrap().all_passed());
        }
    }

    #[test]
    fn n_series_is_a_homomorphism(m in -4i64..=4, n in -4i64..=4, th in theory()) {
        let law = th.law(5).unwrap();
        let mut table = NSeries::new(&law).unwrap();
        let (a, b) = (table.get(m).unwrap(), table.get(n).unwrap());
        prop_assert_eq!(law.sum(&a, &b).unwrap(), table.get(m + n).unwrap());
        prop_assert_eq!(a.compose(&[b]).unwrap(), table.get(m * n).unwrap());
    }

    #[test]
    fn negative_n_series(n in 0i64..=4, th in theory(), d in 1u32..=6) {
        let law = th.law(d).unwrap();
        let mut table = NSeries::new(&law).unwrap();
        let inv = law.formal_inverse().unwrap();
        prop_assert_eq!(table.get(-1).unwrap(), inv.clone());
        let t = Series::variable(&law.series_space(), 0);
        prop_assert!(law.sum(&t, &inv).unwrap().is_zero());
        prop_assert_eq!(table.get(-n).unwrap(), inv.compose(&[table.get(n).unwrap()]).unwrap());
    }

    #[test]
    fn law_documents_round_trip(v in values(8), d in 1u32..=4) {
        let f = FormalGroupLaw::from_log(&random_log(d, v)).unwrap();
        let json = serde_json::to_string(&f.to_doc()).unwrap();
        let back = FormalGroupLaw::from_doc(&serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }
}
