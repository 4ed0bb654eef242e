use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::json::SeriesDoc;
use crate::algebra::{CoefficientMap, CoefficientRing, Exponents, Series, SeriesSpace, Variable};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Power-series variable: elements may have unbounded degree in it.
    Series,
    /// Polynomial variable, normally bounded by a monic relation.
    Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub kind: GeneratorKind,
}

impl Generator {
    pub fn series(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
            kind: GeneratorKind::Series,
        }
    }

    pub fn polynomial(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
            kind: GeneratorKind::Polynomial,
        }
    }
}

/// A relation of a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `x^power = rewrite`, used as a left-to-right rewrite rule.
    Monic {
        variable: usize,
        power: u32,
        rewrite: Series,
    },
    /// An arbitrary homogeneous element set to zero.
    General(Series),
}

impl Relation {
    /// The element generating the ideal.
    pub fn element(&self) -> Series {
        match self {
            Relation::Monic {
                variable,
                power,
                rewrite,
            } => {
                let space = rewrite.space();
                let mut e = vec![0; space.arity()];
                e[*variable] = *power;
                let lead =
                    Series::monomial(space, e, crate::algebra::Coefficient::one(space.ring()))
                        .expect("exponent vector matches space");
                lead.try_sub(rewrite).expect("same space")
            }
            Relation::General(r) => r.clone(),
        }
    }

    pub fn is_monic(&self) -> bool {
        matches!(self, Relation::Monic { .. })
    }
}

/// A graded commutative ring given by generators and relations over a
/// coefficient ring, with all elements truncated at weighted order `D`.
///
/// Monic relations must respect a priority order: the rewrite of relation
/// `k` may mention its own variable only below the leading power, free
/// generators, and variables rewritten by relations after `k`. Rewriting
/// therefore terminates and yields unique normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    space: Arc<SeriesSpace>,
    kinds: Vec<GeneratorKind>,
    relations: Vec<Relation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RelationDoc {
    Monic {
        variable: String,
        power: u32,
        rewrite: SeriesDoc,
    },
    General {
        element: SeriesDoc,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDoc {
    pub ring: CoefficientRing,
    pub generators: Vec<Generator>,
    pub relations: Vec<RelationDoc>,
    pub truncation: u32,
    pub text: String,
}

impl RingPresentation {
    pub fn new(
        ring: CoefficientRing,
        generators: Vec<Generator>,
        relations: Vec<Relation>,
        truncation: u32,
    ) -> Result<Self> {
        let space = SeriesSpace::new(
            ring,
            generators
                .iter()
                .map(|g| Variable::new(g.name.clone(), g.degree))
                .collect(),
            truncation,
        )?;
        let kinds = generators.iter().map(|g| g.kind).collect();
        Self::from_space(space, kinds, relations)
    }

    /// Builds over an existing space; relations must live in it.
    pub fn from_space(
        space: Arc<SeriesSpace>,
        kinds: Vec<GeneratorKind>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        if kinds.len() != space.arity() {
            return Err(Error::Structural(
                "one kind per generator is required".into(),
            ));
        }
        let p = RingPresentation {
            space,
            kinds,
            relations,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
        for (k, r) in self.relations.iter().enumerate() {
            let el = match r {
                Relation::Monic { rewrite, .. } | Relation::General(rewrite) => rewrite,
            };
            if **el.space() != *self.space {
                return Err(Error::Structural(format!(
                    "relation {} lives in a different space",
                    k + 1
                )));
            }
            if let Relation::Monic { variable, .. } = r {
                if *variable >= self.space.arity() {
                    return Err(Error::Structural(format!(
                        "relation {} names no generator",
                        k + 1
                    )));
                }
                if owner.insert(*variable, k).is_some() {
                    return Err(Error::Structural(format!(
                        "generator {} has two monic relations",
                        self.space.variables()[*variable].name
                    )));
                }
            }
        }
        for (k, r) in self.relations.iter().enumerate() {
            let element = r.element();
            if !element.is_homogeneous() {
                return Err(Error::Grading(format!(
                    "relation {} is not homogeneous",
                    k + 1
                )));
            }
            let Relation::Monic {
                variable,
                power,
                rewrite,
            } = r
            else {
                continue;
            };
            let lead = power * self.space.variables()[*variable].degree;
            for (e, _) in rewrite.terms() {
                if e[*variable] >= *power {
                    return Err(Error::Strategy(format!(
                        "rewrite of relation {} is not of lower degree in {}",
                        k + 1,
                        self.space.variables()[*variable].name
                    )));
                }
                if self.space.order(e) < lead {
                    return Err(Error::Strategy(format!(
                        "rewrite of relation {} lowers the order",
                        k + 1
                    )));
                }
                for (&w, &j) in &owner {
                    if w != *variable && j <= k && e[w] > 0 {
                        return Err(Error::Strategy(format!(
                            "rewrite of relation {} uses {}, which an earlier relation rewrites",
                            k + 1,
                            self.space.variables()[w].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn space(&self) -> &Arc<SeriesSpace> {
        &self.space
    }

    pub fn ring(&self) -> CoefficientRing {
        self.space.ring()
    }

    pub fn truncation(&self) -> u32 {
        self.space.truncation()
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.space
            .variables()
            .iter()
            .zip(&self.kinds)
            .map(|(v, &kind)| Generator {
                name: v.name.clone(),
                degree: v.degree,
                kind,
            })
            .collect()
    }

    pub fn kinds(&self) -> &[GeneratorKind] {
        &self.kinds
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation_elements(&self) -> Vec<Series> {
        self.relations.iter().map(Relation::element).collect()
    }

    pub fn is_monic(&self) -> bool {
        self.relations.iter().all(Relation::is_monic)
    }

    pub fn generator(&self, name: &str) -> Result<Series> {
        Series::variable_named(&self.space, name)
    }

    /// `(variable, power)` for every monic relation.
    fn bounds(&self) -> Vec<(usize, u32)> {
        self.relations
            .iter()
            .filter_map(|r| match r {
                Relation::Monic {
                    variable, power, ..
                } => Some((*variable, *power)),
                Relation::General(_) => None,
            })
            .collect()
    }

    /// Whether the monomial is in normal form for the monic relations.
    pub fn is_standard(&self, exps: &[u32]) -> bool {
        self.bounds().iter().all(|&(v, p)| exps[v] < p)
    }

    /// Normal form with respect to the monic relations.
    pub fn monic_reduce(&self, x: &Series) -> Result<Series> {
        if !self.is_monic() {
            return Err(Error::Strategy(
                "monic reduction needs only monic relations".into(),
            ));
        }
        if **x.space() != *self.space {
            return Err(Error::Structural(
                "element is not in this presentation".into(),
            ));
        }
        let rules: Vec<(usize, u32, &Series)> = self
            .relations
            .iter()
            .map(|r| match r {
                Relation::Monic {
                    variable,
                    power,
                    rewrite,
                } => (*variable, *power, rewrite),
                Relation::General(_) => unreachable!(),
            })
            .collect();
        let mut pending: BTreeMap<Exponents, crate::algebra::Coefficient> =
            x.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        let mut done = Series::zero(&self.space);
        while let Some((e, c)) = pending.pop_last() {
            let Some(&(v, p, rewrite)) = rules.iter().find(|(v, p, _)| e[*v] >= *p) else {
                done.add_term(e, c);
                continue;
            };
            let mut rest = e;
            rest[v] -= p;
            for (re, rc) in rewrite.mul_monomial(&rest, &c).terms() {
                let slot = pending
                    .entry(re.clone())
                    .or_insert_with(|| crate::algebra::Coefficient::zero(self.ring()));
                *slot = slot.try_add(rc)?;
                if slot.is_zero() {
                    pending.remove(re);
                }
            }
        }
        Ok(done)
    }

    /// Number of standard monomials in the rewritten variables: the rank over
    /// the subring generated by the remaining generators.
    pub fn rank_over_free(&self) -> Option<u64> {
        self.is_monic()
            .then(|| self.bounds().iter().map(|&(_, p)| p as u64).product())
    }

    /// Same ring with a different truncation.
    pub fn with_truncation(&self, truncation: u32) -> Result<Self> {
        let space = self.space.with_truncation(truncation);
        let move_ = |s: &Series| -> Result<Series> {
            if truncation <= self.truncation() {
                s.relabel(&space)
            } else {
                let mut out = Series::zero(&space);
                for (e, c) in s.terms() {
                    out.add_term(e.clone(), c.clone());
                }
                Ok(out)
            }
        };
        let relations = self
            .relations
            .iter()
            .map(|r| {
                Ok(match r {
                    Relation::Monic {
                        variable,
                        power,
                        rewrite,
                    } => Relation::Monic {
                        variable: *variable,
                        power: *power,
                        rewrite: move_(rewrite)?,
                    },
                    Relation::General(g) => Relation::General(move_(g)?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_space(space, self.kinds.clone(), relations)
    }

    /// Applies a coefficient morphism to every relation.
    pub fn specialize(&self, map: &CoefficientMap) -> Result<Self> {
        let relations = self
            .relations
            .iter()
            .map(|r| {
                Ok(match r {
                    Relation::Monic {
                        variable,
                        power,
                        rewrite,
                    } => Relation::Monic {
                        variable: *variable,
                        power: *power,
                        rewrite: rewrite.specialize(map)?,
                    },
                    Relation::General(g) => Relation::General(g.specialize(map)?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_space(
            self.space.with_ring(map.target()),
            self.kinds.clone(),
            relations,
        )
    }

    /// Adjoins generators after the existing ones; relations are carried over.
    pub fn adjoin(&self, extra: &[Generator]) -> Result<Self> {
        let mut vars = self.space.variables().to_vec();
        vars.extend(
            extra
                .iter()
                .map(|g| Variable::new(g.name.clone(), g.degree)),
        );
        let space = SeriesSpace::new(self.ring(), vars, self.truncation())?;
        let mut kinds = self.kinds.clone();
        kinds.extend(extra.iter().map(|g| g.kind));
        let relations = self
            .relations
            .iter()
            .map(|r| {
                Ok(match r {
                    Relation::Monic {
                        variable,
                        power,
                        rewrite,
                    } => Relation::Monic {
                        variable: *variable,
                        power: *power,
                        rewrite: embed(rewrite, &space, 0)?,
                    },
                    Relation::General(g) => Relation::General(embed(g, &space, 0)?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_space(space, kinds, relations)
    }

    pub fn to_doc(&self) -> PresentationDoc {
        let relations = self
            .relations
            .iter()
            .map(|r| match r {
                Relation::Monic {
                    variable,
                    power,
                    rewrite,
                } => RelationDoc::Monic {
                    variable: self.space.variables()[*variable].name.clone(),
                    power: *power,
                    rewrite: rewrite.to_doc(),
                },
                Relation::General(g) => RelationDoc::General {
                    element: g.to_doc(),
                },
            })
            .collect();
        PresentationDoc {
            ring: self.ring(),
            generators: self.generators(),
            relations,
            truncation: self.truncation(),
            text: self.to_string(),
        }
    }

    pub fn from_doc(doc: &PresentationDoc) -> Result<Self> {
        let base = Self::new(doc.ring, doc.generators.clone(), vec![], doc.truncation)?;
        let load = |d: &SeriesDoc| Series::from_doc(d)?.relabel(&base.space);
        let relations = doc
            .relations
            .iter()
            .map(|r| {
                Ok(match r {
                    RelationDoc::Monic {
                        variable,
                        power,
                        rewrite,
                    } => Relation::Monic {
                        variable: base.space.index_of(variable).ok_or_else(|| {
                            Error::Structural(format!("unknown generator {variable}"))
                        })?,
                        power: *power,
                        rewrite: load(rewrite)?,
                    },
                    RelationDoc::General { element } => Relation::General(load(element)?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_space(base.space.clone(), base.kinds.clone(), relations)
    }
}

/// Copies `x` into a space that contains its variables at positions
/// `offset..offset + arity`, padding other exponents with zero.
pub(crate) fn embed(x: &Series, space: &Arc<SeriesSpace>, offset: usize) -> Result<Series> {
    if space.ring() != x.ring() {
        return Err(Error::Structural(
            "embedding needs the same coefficient ring".into(),
        ));
    }
    let mut out = Series::zero(space);
    for (e, c) in x.terms() {
        let mut f = vec![0; space.arity()];
        f[offset..offset + e.len()].copy_from_slice(e);
        out.add_term(f, c.clone());
    }
    Ok(out)
}

impl fmt::Display for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring().display_name())?;
        let mut polys = Vec::new();
        let mut series = Vec::new();
        for (v, k) in self.space.variables().iter().zip(&self.kinds) {
            match k {
                GeneratorKind::Series => series.push(v.name.as_str()),
                GeneratorKind::Polynomial => polys.push(v.name.as_str()),
            }
        }
        if !series.is_empty() {
            write!(f, "[[{}]]", series.join(", "))?;
        }
        if !polys.is_empty() {
            write!(f, "[{}]", polys.join(", "))?;
        }
        let degrees: Vec<String> = self
            .space
            .variables()
            .iter()
            .map(|v| format!("deg {} = {}", v.name, v.degree))
            .collect();
        if !degrees.is_empty() {
            write!(f, "  ({})", degrees.join(", "))?;
        }
        writeln!(f)?;
        for r in &self.relations {
            match r {
                Relation::Monic {
                    variable,
                    power,
                    rewrite,
                } => {
                    let mut e = vec![0; self.space.arity()];
                    e[*variable] = *power;
                    let lead = Series::monomial_text(&self.space, &e);
                    writeln!(
                        f,
                        "  {} = {}",
                        if lead.is_empty() { "1".into() } else { lead },
                        rewrite
                    )?;
                }
                Relation::General(g) => writeln!(f, "  {g} = 0")?,
            }
        }
        write!(f, "  modulo order > {}", self.truncation())
    }
}
