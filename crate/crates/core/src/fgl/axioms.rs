use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Series, SeriesSpace};
use crate::error::Result;

use super::FormalGroupLaw;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `F(u, 0) = u` and `F(0, v) = v`.
    Unit,
    Commutativity,
    Associativity,
    /// Every coefficient of `uᵃvᵇ` has degree `1 − a − b`.
    Homogeneity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Unit => "unit",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::Homogeneity => "homogeneity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// First failing monomial with the offending coefficient, if any.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub truncation: u32,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "{:<14} {}",
                c.axiom.to_string(),
                if c.passed { "pass" } else { "FAIL" }
            )?;
            if let Some(w) = &c.witness {
                write!(f, "  (first difference: {w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn first_difference(lhs: &Series, rhs: &Series) -> Result<Option<String>> {
    let diff = lhs.try_sub(rhs)?;
    Ok(diff
        .sorted_terms()
        .first()
        .map(|(e, c)| format!("{}·{}", c, Series::monomial_text(diff.space(), e))))
}

fn check(axiom: Axiom, witness: Option<String>) -> AxiomCheck {
    AxiomCheck {
        axiom,
        passed: witness.is_none(),
        witness,
    }
}

impl FormalGroupLaw {
    /// Checks the law axioms identically up to the truncation. Failures are
    /// reported, not raised.
    pub fn verify_axioms(&self) -> Result<AxiomReport> {
        let ring = self.ring();
        let d = self.truncation();
        let f = self.series();

        let one = SeriesSpace::univariate(ring, "u", d);
        let u1 = Series::variable(&one, 0);
        let zero = Series::zero(&one);
        let mut unit = first_difference(&f.compose(&[u1.clone(), zero.clone()])?, &u1)?;
        if unit.is_none() {
            unit = first_difference(&f.compose(&[zero, u1.clone()])?, &u1)?;
        }

        let two = f.space().clone();
        let u = Series::variable(&two, 0);
        let v = Series::variable(&two, 1);
        let comm = first_difference(f, &f.compose(&[v, u])?)?;

        let three = SeriesSpace::with_names(ring, &["u", "v", "w"], d)?;
        let (u, v, w) = (
            Series::variable(&three, 0),
            Series::variable(&three, 1),
            Series::variable(&three, 2),
        );
        let uv = f.compose(&[u.clone(), v.clone()])?;
        let vw = f.compose(&[v, w.clone()])?;
        let assoc = first_difference(&f.compose(&[uv, w])?, &f.compose(&[u, vw])?)?;

        let homog = f
            .sorted_terms()
            .into_iter()
            .find(|(e, c)| !c.is_homogeneous_of(1 - two.order(e) as i64))
            .map(|(e, c)| {
                format!(
                    "{}·{} (expected degree {})",
                    c,
                    Series::monomial_text(&two, e),
                    1 - two.order(e) as i64
                )
            });

        Ok(AxiomReport {
            truncation: d,
            checks: vec![
                check(Axiom::Unit, unit),
                check(Axiom::Commutativity, comm),
                check(Axiom::Associativity, assoc),
                check(Axiom::Homogeneity, homog),
            ],
        })
    }
}
