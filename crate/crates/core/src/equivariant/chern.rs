use serde::{Deserialize, Serialize};

use crate::algebra::Series;
use crate::error::{Error, Result};

/// Total Chern class of a sum of line bundles: `c_k = e_k(roots)`,
/// returned for `k = 0 … r`.
pub fn chern_classes_of_sum(roots: &[Series]) -> Result<Vec<Series>> {
    let space = match roots.first() {
        Some(x) => x.space().clone(),
        None => return Err(Error::Argument("at least one root is required".into())),
    };
    let mut c = vec![Series::one(&space)];
    for (j, x) in roots.iter().enumerate() {
        if **x.space() != *space {
            return Err(Error::Structural(format!(
                "root {} lives in a different ring",
                j + 1
            )));
        }
        if !x.is_homogeneous_of(1) {
            return Err(Error::Grading(format!(
                "root {} is not homogeneous of degree 1",
                j + 1
            )));
        }
        let mut next = c.clone();
        next.push(Series::zero(&space));
        for k in 1..next.len() {
            next[k] = next[k].try_add(&x.try_mul(&c[k - 1])?)?;
        }
        c = next;
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhitneyReport {
    pub passed: bool,
    /// The first `n` with `c_n(A ⊕ B) ≠ Σ c_l(A) c_{n−l}(B)`, with the difference.
    pub witness: Option<String>,
}

/// Checks `c(A ⊕ B) = c(A)·c(B)` degree by degree.
pub fn whitney_check(a: &[Series], b: &[Series]) -> Result<WhitneyReport> {
    let ca = chern_classes_of_sum(a)?;
    let cb = chern_classes_of_sum(b)?;
    let both: Vec<Series> = a.iter().chain(b).cloned().collect();
    let cs = chern_classes_of_sum(&both)?;
    for (n, lhs) in cs.iter().enumerate() {
        let mut rhs = Series::zero(lhs.space());
        for l in 0..=n {
            if let (Some(x), Some(y)) = (ca.get(l), cb.get(n - l)) {
                rhs = rhs.try_add(&x.try_mul(y)?)?;
            }
        }
        let diff = lhs.try_sub(&rhs)?;
        if !diff.is_zero() {
            return Ok(WhitneyReport {
                passed: false,
                witness: Some(format!("c{n}: difference {diff}")),
            });
        }
    }
    Ok(WhitneyReport {
        passed: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CoefficientRing, SeriesSpace};

    #[test]
    fn examples() {
        let s = SeriesSpace::with_names(CoefficientRing::IntegerAdditive, &["x", "y"], 4).unwrap();
        let x = Series::variable(&s, 0);
        let y = Series::variable(&s, 1);
        let c = chern_classes_of_sum(std::slice::from_ref(&x)).unwrap();
        assert_eq!(c[1], x);
        let c = chern_classes_of_sum(&[x.clone(), y.clone()]).unwrap();
        assert_eq!(c[1].to_string(), "x + y");
        assert_eq!(c[2].to_string(), "xy");
        let c = chern_classes_of_sum(&[x.clone(), x.neg()]).unwrap();
        assert!(c[1].is_zero());
        assert_eq!(c[2].to_string(), "-x²");
        assert!(whitney_check(std::slice::from_ref(&x), std::slice::from_ref(&y)).unwrap().passed);
        assert!(
            whitney_check(&[x.clone(), x.neg()], &[Series::zero(&s)])
                .unwrap()
                .passed
        );
    }

    #[test]
    fn bad_degree() {
        let s = SeriesSpace::univariate(CoefficientRing::IntegerAdditive, "x", 3);
        let x = Series::variable(&s, 0);
        assert!(matches!(
            chern_classes_of_sum(&[x.pow(2)]),
            Err(Error::Grading(_))
        ));
    }
}
