use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::coefficient::write_signed_term;
use super::ring::superscript;
use super::specialize::CoefficientMap;
use super::{Coefficient, CoefficientRing, Scalar};
use crate::error::{Error, Result};

/// Exponents over a series space's variables, one entry per variable.
pub type Exponents = Vec<u32>;

/// A series variable with a positive cohomological degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

impl Variable {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Variable {
            name: name.into(),
            degree,
        }
    }
}

/// Ambient data shared by all series that can be combined: coefficient
/// ring, ordered variables, and the truncation bound `D`.
///
/// Terms of weighted order `> D` are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeriesSpace {
    ring: CoefficientRing,
    variables: Vec<Variable>,
    truncation: u32,
}

impl SeriesSpace {
    pub fn new(
        ring: CoefficientRing,
        variables: Vec<Variable>,
        truncation: u32,
    ) -> Result<Arc<Self>> {
        for (i, v) in variables.iter().enumerate() {
            if v.degree == 0 {
                return Err(Error::Grading(format!(
                    "variable {} must have positive degree",
                    v.name
                )));
            }
            if variables[..i].iter().any(|w| w.name == v.name) {
                return Err(Error::Structural(format!(
                    "duplicate variable name {}",
                    v.name
                )));
            }
        }
        Ok(Arc::new(SeriesSpace {
            ring,
            variables,
            truncation,
        }))
    }

    /// One degree-1 variable.
    pub fn univariate(ring: CoefficientRing, name: &str, truncation: u32) -> Arc<Self> {
        Arc::new(SeriesSpace {
            ring,
            variables: vec![Variable::new(name, 1)],
            truncation,
        })
    }

    /// Degree-1 variables with the given names.
    pub fn with_names(ring: CoefficientRing, names: &[&str], truncation: u32) -> Result<Arc<Self>> {
        Self::new(
            ring,
            names.iter().map(|n| Variable::new(*n, 1)).collect(),
            truncation,
        )
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn order(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(&self.variables)
            .map(|(e, v)| e * v.degree)
            .sum()
    }

    pub fn with_truncation(&self, truncation: u32) -> Arc<Self> {
        Arc::new(SeriesSpace {
            truncation,
            ..self.clone()
        })
    }

    pub fn with_ring(&self, ring: CoefficientRing) -> Arc<Self> {
        Arc::new(SeriesSpace {
            ring,
            ..self.clone()
        })
    }

    /// All exponent vectors of weighted order exactly `k`, in descending
    /// lexicographic order.
    pub fn monomials_of_order(&self, k: u32) -> Vec<Exponents> {
        let weights: Vec<u32> = self.variables.iter().map(|v| v.degree).collect();
        let mut out = Vec::new();
        let mut current = vec![0; weights.len()];
        fn rec(
            weights: &[u32],
            pos: usize,
            left: u32,
            current: &mut Vec<u32>,
            out: &mut Vec<Exponents>,
        ) {
            if pos == weights.len() {
                if left == 0 {
                    out.push(current.clone());
                }
                return;
            }
            let w = weights[pos];
            for e in (0..=left / w).rev() {
                current[pos] = e;
                rec(weights, pos + 1, left - e * w, current, out);
            }
            current[pos] = 0;
        }
        rec(&weights, 0, k, &mut current, &mut out);
        out
    }

    /// All exponent vectors of weighted order `≤ k`, grouped by order.
    pub fn monomials_up_to(&self, k: u32) -> Vec<Exponents> {
        (0..=k).flat_map(|d| self.monomials_of_order(d)).collect()
    }
}

/// Truncated multivariate power series with graded coefficients.
#[derive(Clone, Debug)]
pub struct Series {
    space: Arc<SeriesSpace>,
    terms: BTreeMap<Exponents, Coefficient>,
}

impl PartialEq for Series {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.space, &other.space) || self.space == other.space)
            && self.terms == other.terms
    }
}

impl Eq for Series {}

fn add_exps(a: &[u32], b: &[u32]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Series {
    pub fn zero(space: &Arc<SeriesSpace>) -> Self {
        Series {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(space: &Arc<SeriesSpace>) -> Self {
        Self::constant(space, Coefficient::one(space.ring))
    }

    pub fn from_int(space: &Arc<SeriesSpace>, n: i64) -> Self {
        Self::constant(space, Coefficient::from_int(space.ring, n))
    }

    pub fn constant(space: &Arc<SeriesSpace>, c: Coefficient) -> Self {
        let mut out = Self::zero(space);
        out.add_term(vec![0; space.arity()], c);
        out
    }

    /// The variable with the given index, or zero if its degree exceeds `D`.
    pub fn variable(space: &Arc<SeriesSpace>, index: usize) -> Self {
        let mut exps = vec![0; space.arity()];
        exps[index] = 1;
        let mut out = Self::zero(space);
        out.add_term(exps, Coefficient::one(space.ring));
        out
    }

    pub fn variable_named(space: &Arc<SeriesSpace>, name: &str) -> Result<Self> {
        let i = space
            .index_of(name)
            .ok_or_else(|| Error::Structural(format!("no variable named {name}")))?;
        Ok(Self::variable(space, i))
    }

    /// `c · x^exps`, dropped if above the truncation.
    pub fn monomial(space: &Arc<SeriesSpace>, exps: Exponents, c: Coefficient) -> Result<Self> {
        if exps.len() != space.arity() {
            return Err(Error::Structural(format!(
                "exponent vector of length {} in a space with {} variables",
                exps.len(),
                space.arity()
            )));
        }
        if c.ring() != space.ring {
            return Err(Error::Structural(
                "coefficient ring differs from series ring".into(),
            ));
        }
        let mut out = Self::zero(space);
        out.add_term(exps, c);
        Ok(out)
    }

    pub fn from_terms(
        space: &Arc<SeriesSpace>,
        terms: impl IntoIterator<Item = (Exponents, Coefficient)>,
    ) -> Result<Self> {
        let mut out = Self::zero(space);
        for (e, c) in terms {
            out = out.try_add(&Self::monomial(space, e, c)?)?;
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, exps: Exponents, c: Coefficient) {
        if c.is_zero() || self.space.order(&exps) > self.space.truncation {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn space(&self) -> &Arc<SeriesSpace> {
        &self.space
    }

    pub fn ring(&self) -> CoefficientRing {
        self.space.ring
    }

    pub fn truncation(&self) -> u32 {
        self.space.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Coefficient)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Coefficient {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| Coefficient::zero(self.space.ring))
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&vec![0; self.space.arity()])
    }

    /// Lowest weighted order among stored terms.
    pub fn min_order(&self) -> Option<u32> {
        self.terms.keys().map(|e| self.space.order(e)).min()
    }

    /// Degree of the term `c·x^e`: weighted order plus coefficient degree.
    fn term_degree(&self, exps: &[u32], c: &Coefficient) -> Option<i64> {
        c.degree().map(|d| d + self.space.order(exps) as i64)
    }

    /// Degree if nonzero and homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut it = self.terms.iter().map(|(e, c)| self.term_degree(e, c));
        let first = it.next()??;
        it.all(|d| d == Some(first)).then_some(first)
    }

    /// Zero is homogeneous of every degree.
    pub fn is_homogeneous_of(&self, degree: i64) -> bool {
        self.terms.iter().all(|(e, c)| {
            let order = self.space.order(e) as i64;
            c.is_homogeneous_of(degree - order)
        })
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
            return Ok(());
        }
        let a = &self.space;
        let b = &other.space;
        let what = if a.ring != b.ring {
            format!("coefficient rings {} vs {}", a.ring.label(), b.ring.label())
        } else if a.truncation != b.truncation {
            format!("truncations {} vs {}", a.truncation, b.truncation)
        } else {
            "variable lists differ".to_string()
        };
        Err(Error::Structural(what))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Series {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    /// Cauchy product, discarding every term above the truncation.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let d = self.space.truncation;
        let mut out = Self::zero(&self.space);
        for (ea, ca) in &self.terms {
            let oa = self.space.order(ea);
            for (eb, cb) in &other.terms {
                if oa + self.space.order(eb) > d {
                    continue;
                }
                out.add_term(add_exps(ea, eb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// Multiplies every term by a coefficient of the same ring.
    pub fn scale(&self, c: &Coefficient) -> Result<Self> {
        if c.ring() != self.space.ring {
            return Err(Error::Structural(
                "coefficient ring differs from series ring".into(),
            ));
        }
        let mut out = Self::zero(&self.space);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x.mul(c));
        }
        Ok(out)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Coefficient::from_int(self.space.ring, n))
            .expect("same ring")
    }

    /// `c · x^exps · self`.
    pub fn mul_monomial(&self, exps: &[u32], c: &Coefficient) -> Self {
        let mut out = Self::zero(&self.space);
        let shift = self.space.order(exps);
        if shift > self.space.truncation {
            return out;
        }
        for (e, x) in &self.terms {
            out.add_term(add_exps(e, exps), x.mul(c));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.space);
        for _ in 0..n {
            acc = acc.try_mul(self).expect("same space");
        }
        acc
    }

    /// Drops terms above a lower truncation bound.
    pub fn truncate_to(&self, truncation: u32) -> Result<Self> {
        if truncation > self.space.truncation {
            return Err(Error::Truncation(format!(
                "cannot raise truncation from {} to {truncation}",
                self.space.truncation
            )));
        }
        let space = self.space.with_truncation(truncation);
        let mut out = Self::zero(&space);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Substitutes `args[i]` for variable `i`. All arguments share the target
    /// space, have zero constant term, and have order at least the weight of
    /// the variable they replace.
    pub fn compose(&self, args: &[Series]) -> Result<Series> {
        let target = args
            .first()
            .map(|a| a.space.clone())
            .ok_or_else(|| Error::Composition("no arguments given; use compose_into".into()))?;
        self.compose_into(&target, args)
    }

    pub fn compose_into(&self, target: &Arc<SeriesSpace>, args: &[Series]) -> Result<Series> {
        if args.len() != self.space.arity() {
            return Err(Error::Composition(format!(
                "expected {} arguments, got {}",
                self.space.arity(),
                args.len()
            )));
        }
        if target.ring != self.space.ring {
            return Err(Error::Structural(format!(
                "coefficient rings {} vs {}",
                self.space.ring.label(),
                target.ring.label()
            )));
        }
        if target.truncation > self.space.truncation {
            return Err(Error::Truncation(format!(
                "target truncation {} exceeds source truncation {}",
                target.truncation, self.space.truncation
            )));
        }
        let mut arg_orders = Vec::with_capacity(args.len());
        for (i, a) in args.iter().enumerate() {
            if a.space != *target {
                return Err(Error::Structural(format!(
                    "argument {i} lives in a different space"
                )));
            }
            if !a.constant_term().is_zero() {
                return Err(Error::Composition(format!(
                    "argument for {} has nonzero constant term",
                    self.space.variables[i].name
                )));
            }
            let w = self.space.variables[i].degree;
            let order = a.min_order().unwrap_or(u32::MAX);
            if order < w {
                return Err(Error::Composition(format!(
                    "argument for {} has order {order} below the variable's degree {w}",
                    self.space.variables[i].name
                )));
            }
            arg_orders.push(order);
        }
        let d = target.truncation;
        let mut powers: Vec<Vec<Series>> = args.iter().map(|_| vec![Series::one(target)]).collect();
        let mut out = Series::zero(target);
        for (exps, c) in &self.terms {
            let lower: u64 = exps
                .iter()
                .zip(&arg_orders)
                .map(|(&e, &o)| e as u64 * o as u64)
                .sum();
            if lower > d as u64 {
                continue;
            }
            let mut prod = Series::constant(target, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().try_mul(&args[i])?;
                    powers[i].push(next);
                }
                prod = prod.try_mul(&powers[i][e as usize])?;
                if prod.is_zero() {
                    break;
                }
            }
            out = out.try_add(&prod)?;
        }
        Ok(out)
    }

    fn single_variable(&self, what: &str) -> Result<u32> {
        if self.space.arity() != 1 {
            return Err(Error::Structural(format!(
                "{what} needs a single-variable series"
            )));
        }
        Ok(self.space.variables[0].degree)
    }

    /// Compositional inverse `g` with `f∘g = g∘f = x` to the truncation.
    pub fn reversion(&self) -> Result<Series> {
        let w = self.single_variable("reversion")?;
        if !self.constant_term().is_zero() {
            return Err(Error::Reversion("nonzero constant term".into()));
        }
        let linear = self.coefficient(&[1]);
        let inv = linear.inverse().ok_or_else(|| {
            Error::Reversion(format!("linear coefficient {linear} is not a unit"))
        })?;
        let space = &self.space;
        let d = space.truncation;
        let mut g = Series::variable(space, 0).scale(&inv)?;
        // f(g + δx^k) = f(g) + linear·δ·x^k + (order > k)
        for k in 2..=d / w {
            let fg = self.compose(std::slice::from_ref(&g))?;
            let err = fg.coefficient(&[k]);
            if !err.is_zero() {
                let delta = err.mul(&inv).neg();
                g.add_term(vec![k], delta);
            }
        }
        Ok(g)
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = self.constant_term();
        let inv = c0
            .inverse()
            .ok_or_else(|| Error::Reciprocal(format!("constant term {c0} is not a unit")))?;
        // g = c0⁻¹ Σ hᵏ with h = 1 − c0⁻¹ f of positive order
        let h = Series::one(&self.space).try_sub(&self.scale(&inv)?)?;
        let mut g = Series::one(&self.space);
        for _ in 0..self.space.truncation {
            g = Series::one(&self.space).try_add(&h.try_mul(&g)?)?;
        }
        g.scale(&inv)
    }

    /// Divides by a variable when every term is divisible by it. The result
    /// is known only up to order `D − deg(x)`, so the truncation drops.
    pub fn divide_by_variable(&self, index: usize) -> Result<Series> {
        let w = self.space.variables[index].degree;
        let new_d =
            self.space.truncation.checked_sub(w).ok_or_else(|| {
                Error::Truncation("truncation below the variable's degree".into())
            })?;
        let space = self.space.with_truncation(new_d);
        let mut out = Series::zero(&space);
        for (e, c) in &self.terms {
            if e[index] == 0 {
                return Err(Error::Argument(format!(
                    "term not divisible by {}",
                    self.space.variables[index].name
                )));
            }
            let mut q = e.clone();
            q[index] -= 1;
            out.add_term(q, c.clone());
        }
        Ok(out)
    }

    /// Applies a coefficient-ring morphism to every coefficient.
    pub fn specialize(&self, map: &CoefficientMap) -> Result<Series> {
        if map.source() != self.space.ring {
            return Err(Error::Structural(format!(
                "map source {} does not match series ring {}",
                map.source().label(),
                self.space.ring.label()
            )));
        }
        let space = self.space.with_ring(map.target());
        let mut out = Series::zero(&space);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), map.apply(c)?);
        }
        Ok(out)
    }

    /// Moves the same terms into an equal-shaped space (used after a ring
    /// change that does not alter scalars).
    pub fn reinterpret(&self, space: &Arc<SeriesSpace>) -> Result<Series> {
        if space.variables != self.space.variables {
            return Err(Error::Structural("variable lists differ".into()));
        }
        let mut out = Series::zero(space);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.change_ring(space.ring)?);
        }
        Ok(out)
    }

    /// Same terms in a space whose variables differ only in name (and
    /// possibly a lower truncation).
    pub fn relabel(&self, space: &Arc<SeriesSpace>) -> Result<Series> {
        let same_shape = space.arity() == self.space.arity()
            && space
                .variables
                .iter()
                .zip(&self.space.variables)
                .all(|(a, b)| a.degree == b.degree);
        if !same_shape || space.ring != self.space.ring {
            return Err(Error::Structural(
                "relabel needs matching variable degrees and ring".into(),
            ));
        }
        if space.truncation > self.space.truncation {
            return Err(Error::Truncation(
                "relabel cannot raise the truncation".into(),
            ));
        }
        let mut out = Series::zero(space);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Terms in canonical order: ascending weighted order, then descending
    /// lexicographic exponents.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Coefficient)> {
        let mut out: Vec<_> = self.terms.iter().collect();
        out.sort_by(|(a, _), (b, _)| self.canonical_cmp(a, b));
        out
    }

    fn canonical_cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.space
            .order(a)
            .cmp(&self.space.order(b))
            .then_with(|| b.cmp(a))
    }

    /// Canonical text of the monomial `x^exps`.
    pub fn monomial_text(space: &SeriesSpace, exps: &[u32]) -> String {
        let mut out = String::new();
        for (v, &e) in space.variables.iter().zip(exps) {
            if e == 0 {
                continue;
            }
            out.push_str(&v.name);
            if e != 1 {
                out.push_str(&superscript(e as i64));
            }
        }
        out
    }

    /// Shorthand used throughout tests: the scalar coefficient of `x^exps`.
    pub fn scalar_at(&self, exps: &[u32]) -> Scalar {
        self.coefficient(exps).constant_term()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (exps, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = Self::monomial_text(&self.space, exps);
            if c.len() == 1 {
                let (cexps, s) = c.terms().next().unwrap();
                let body = Coefficient::monomial_text(c.ring(), cexps) + &mono;
                write_signed_term(f, s, &body, i == 0)?;
            } else {
                if i > 0 {
                    f.write_str(" + ")?;
                }
                write!(f, "({c}){mono}")?;
            }
        }
        Ok(())
    }
}
