use std::sync::Arc;

use super::linalg::sparse_rank;
use super::piece::{rational_rows, PieceBasis};
use super::symmetric::{complete_homogeneous, elementary_symmetric};
use super::{Generator, Morphism, Relation, RingPresentation};
use crate::algebra::{subscript, Coefficient, CoefficientRing, Series};
use crate::error::{Error, Result};

/// `coefficients[x₁ … x_m] / (e₁, …, e_m)` with the standard-monomial rewrite
/// `x_j^{m−j+1} → x_j^{m−j+1} − h_{m−j+1}(x₁, …, x_j)`, listed from `x_m`
/// down to `x₁`.
///
/// Standard monomials are `x^a` with `a_j ≤ m − j`; there are `m!` of them.
pub fn flag_ring(ring: CoefficientRing, m: usize, truncation: u32) -> Result<RingPresentation> {
    if m == 0 {
        return Err(Error::Argument("a flag ring needs m ≥ 1".into()));
    }
    let gens = (1..=m)
        .map(|j| Generator::polynomial(format!("x{}", subscript(j as u64)), 1))
        .collect();
    let base = RingPresentation::new(ring, gens, vec![], truncation)?;
    let space = base.space().clone();
    let mut relations = Vec::with_capacity(m);
    for j in (0..m).rev() {
        let power = (m - j) as u32;
        let head: Vec<usize> = (0..=j).collect();
        let mut lead = vec![0; m];
        lead[j] = power;
        let x_pow = Series::monomial(&space, lead, Coefficient::one(ring))?;
        let rewrite = x_pow.try_sub(&complete_homogeneous(&space, &head, power)?)?;
        relations.push(Relation::Monic {
            variable: j,
            power,
            rewrite,
        });
    }
    RingPresentation::from_space(space, base.kinds().to_vec(), relations)
}

/// `coefficients[η₁ … η_n] / (q_{i+1}, …, q_{i+n})` with `deg η_j = j` and
/// `Σ q_k = (1 + η₁ + … + η_n)⁻¹`: the cobordism ring of `Gr(n, n+i)`.
pub fn grassmannian_ring(
    ring: CoefficientRing,
    n: usize,
    i: usize,
    truncation: u32,
) -> Result<RingPresentation> {
    if n == 0 || i == 0 {
        return Err(Error::Argument("a Grassmannian needs n, i ≥ 1".into()));
    }
    let gens = (1..=n)
        .map(|j| Generator::polynomial(format!("η{}", subscript(j as u64)), j as u32))
        .collect();
    let base = RingPresentation::new(ring, gens, vec![], truncation)?;
    let space = base.space().clone();
    let etas: Vec<Series> = (0..n).map(|j| Series::variable(&space, j)).collect();
    let mut q = vec![Series::one(&space)];
    for k in 1..=i + n {
        let mut qk = Series::zero(&space);
        for j in 1..=k.min(n) {
            qk = qk.try_sub(&etas[j - 1].try_mul(&q[k - j])?)?;
        }
        q.push(qk);
    }
    let relations = q[i + 1..=i + n]
        .iter()
        .map(|r| Relation::General(r.clone()))
        .collect();
    RingPresentation::from_space(space, base.kinds().to_vec(), relations)
}

/// `η_j ↦ e_j(x₁ … x_n)` into `flag_ring(n + i)`.
pub fn grassmannian_embedding(
    grassmannian: Arc<RingPresentation>,
    flag: Arc<RingPresentation>,
    n: usize,
) -> Result<Morphism> {
    let vars: Vec<usize> = (0..n).collect();
    let images = (1..=n)
        .map(|j| elementary_symmetric(flag.space(), &vars, j))
        .collect::<Result<Vec<_>>>()?;
    Morphism::new(grassmannian, flag, images)
}

/// Per-degree ranks of the image of the Grassmannian ring inside the flag
/// ring, for degrees `0..=truncation`.
pub fn grassmannian_image_ranks(
    ring: CoefficientRing,
    n: usize,
    i: usize,
    truncation: u32,
) -> Result<Vec<u64>> {
    let gr = Arc::new(grassmannian_ring(ring, n, i, truncation)?);
    let flag = Arc::new(flag_ring(ring, n + i, truncation)?);
    let f = grassmannian_embedding(gr.clone(), flag.clone(), n)?;
    let one = Coefficient::one(ring);
    (0..=truncation as i64)
        .map(|d| {
            let src = PieceBasis::new(gr.space(), d)?;
            let tgt = PieceBasis::new(flag.space(), d)?;
            let rows = src
                .monomials()
                .iter()
                .map(|m| {
                    let img = f.apply(&Series::monomial(gr.space(), m.clone(), one.clone())?)?;
                    Ok(tgt.sparse_vector(&img))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(sparse_rank(rational_rows(rows)) as u64)
        })
        .collect()
}
