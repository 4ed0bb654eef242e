use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{graded_piece_snf, GradedPieceReport, Morphism, RingPresentation};
use crate::error::{Error, Result};

type StageBuilder = dyn Fn(usize) -> Result<RingPresentation> + Send + Sync;
type TransitionBuilder =
    dyn Fn(Arc<RingPresentation>, Arc<RingPresentation>) -> Result<Morphism> + Send + Sync;

/// An inverse system `… → R_{i+1} → R_i → … → R_first` built on demand.
///
/// The transition `i` is the map `R_{i+1} → R_i`; by default it sends each
/// generator to the generator of the same name.
pub struct ProRing {
    name: String,
    first: usize,
    build: Box<StageBuilder>,
    transition: Box<TransitionBuilder>,
    stages: Vec<Arc<RingPresentation>>,
}

impl fmt::Debug for ProRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProRing")
            .field("name", &self.name)
            .field("first", &self.first)
            .field("built", &self.stages.len())
            .finish()
    }
}

impl ProRing {
    pub fn new(
        name: impl Into<String>,
        first: usize,
        build: impl Fn(usize) -> Result<RingPresentation> + Send + Sync + 'static,
    ) -> Self {
        ProRing {
            name: name.into(),
            first,
            build: Box::new(build),
            transition: Box::new(Morphism::identity_by_name),
            stages: Vec::new(),
        }
    }

    pub fn with_transition(
        mut self,
        transition: impl Fn(Arc<RingPresentation>, Arc<RingPresentation>) -> Result<Morphism>
            + Send
            + Sync
            + 'static,
    ) -> Self {
        self.transition = Box::new(transition);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn first_index(&self) -> usize {
        self.first
    }

    pub fn stage(&mut self, i: usize) -> Result<Arc<RingPresentation>> {
        if i < self.first {
            return Err(Error::Argument(format!(
                "stage {i} precedes the first stage {}",
                self.first
            )));
        }
        while self.stages.len() <= i - self.first {
            let next = (self.build)(self.first + self.stages.len())?;
            self.stages.push(Arc::new(next));
        }
        Ok(self.stages[i - self.first].clone())
    }

    /// The map `R_{i+1} → R_i`.
    pub fn transition(&mut self, i: usize) -> Result<Morphism> {
        let target = self.stage(i)?;
        let source = self.stage(i + 1)?;
        (self.transition)(source, target)
    }

    /// Per-transition surjectivity in degree `d` for stages `first..=last`.
    pub fn verify_surjective(&mut self, d: i64, last: usize) -> Result<Vec<(usize, bool)>> {
        (self.first..last)
            .map(|i| Ok((i, self.transition(i)?.is_surjective_in_degree(d)?)))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum Stabilization {
    /// Every stage from `index` through the last one examined has the same
    /// degree-`d` piece.
    Stable { index: usize },
    /// The examined stages did not settle.
    Inconclusive { last: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizationReport {
    pub degree: i64,
    pub stages: Vec<(usize, GradedPieceReport)>,
    pub outcome: Stabilization,
}

/// Least stage index from which the degree-`d` piece no longer changes,
/// examining stages `first..=last`.
///
/// Transitions are checked surjective in degree `d` first; a surjection
/// between isomorphic finitely generated groups is an isomorphism, so equal
/// reports mean the transitions are isomorphisms. At least one later stage
/// must confirm the index.
pub fn pro_stabilize(tower: &mut ProRing, d: i64, last: usize) -> Result<StabilizationReport> {
    for (i, ok) in tower.verify_surjective(d, last)? {
        if !ok {
            return Err(Error::Structural(format!(
                "{}: transition from stage {} to {i} is not surjective in degree {d}",
                tower.name,
                i + 1
            )));
        }
    }
    let stages = (tower.first..=last)
        .map(|i| Ok((i, graded_piece_snf(&*tower.stage(i)?, d)?)))
        .collect::<Result<Vec<_>>>()?;
    let (_, final_report) = stages.last().expect("at least one stage");
    let mut index = last;
    for (i, r) in stages.iter().rev() {
        if r.same_group(final_report) {
            index = *i;
        } else {
            break;
        }
    }
    let outcome = if index < last {
        Stabilization::Stable { index }
    } else {
        Stabilization::Inconclusive { last }
    };
    Ok(StabilizationReport {
        degree: d,
        stages,
        outcome,
    })
}
