use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::{axpy, sparse, SparseRow};

/// Nonzero invariant factors of an integer matrix, positive and in
/// divisibility order. `rows` is a list of rows of length `cols`.
pub fn invariant_factors(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    sparse_invariant_factors(rows.into_iter().map(sparse).collect(), cols)
}

/// Sparse rows are first brought to echelon form over ℤ. Pivots equal to 1
/// split off a unimodular block; the remaining rows and columns go to the
/// dense reduction.
pub(crate) fn sparse_invariant_factors(rows: Vec<SparseRow<BigInt>>, cols: usize) -> Vec<BigInt> {
    let echelon = integer_echelon(rows);
    let (units, others): (Vec<_>, Vec<_>) = echelon.into_iter().partition(|(_, r)| r[0].1.is_one());
    let unit_rows: BTreeMap<usize, SparseRow<BigInt>> = units.into_iter().collect();
    let mut residual = Vec::new();
    for (_, mut row) in others {
        for (c, u) in &unit_rows {
            if let Some(k) = row.iter().position(|(j, _)| j == c) {
                let f = row[k].1.clone();
                row = axpy(&row, &f, u);
            }
        }
        residual.push(row);
    }
    let mut keep: Vec<usize> = residual.iter().flatten().map(|(c, _)| *c).collect();
    keep.sort_unstable();
    keep.dedup();
    let dense: Vec<Vec<BigInt>> = residual
        .into_iter()
        .map(|row| {
            let mut v = vec![BigInt::zero(); keep.len()];
            for (c, x) in row {
                v[keep.binary_search(&c).expect("column kept")] = x;
            }
            v
        })
        .collect();
    debug_assert!(unit_rows.len() + keep.len() <= cols);
    let mut out = vec![BigInt::one(); unit_rows.len()];
    out.extend(dense_invariant_factors(dense, keep.len()));
    out
}

/// Echelon form keyed by leading column, leading entries positive. Rows
/// meeting an existing pivot are combined with it through the extended gcd.
pub(crate) fn integer_echelon(rows: Vec<SparseRow<BigInt>>) -> HashMap<usize, SparseRow<BigInt>> {
    let mut pivots: HashMap<usize, SparseRow<BigInt>> = HashMap::new();
    for mut row in rows {
        while let Some((lead, a)) = row.first().cloned() {
            let Some(p) = pivots.get_mut(&lead) else {
                if a.is_negative() {
                    row = row.into_iter().map(|(c, x)| (c, -x)).collect();
                }
                pivots.insert(lead, row);
                break;
            };
            let b = p[0].1.clone();
            if a.is_multiple_of(&b) {
                row = axpy(&row, &(&a / &b), p);
                continue;
            }
            let e = a.extended_gcd(&b);
            // s·row + t·p has leading entry g; (b/g)·row − (a/g)·p has none.
            let combined = add(&scale(&row, &e.x), &scale(p, &e.y));
            row = axpy(&scale(&row, &(&b / &e.gcd)), &(&a / &e.gcd), p);
            *p = if combined[0].1.is_negative() {
                scale(&combined, &-BigInt::one())
            } else {
                combined
            };
        }
    }
    pivots
}

fn scale(row: &[(usize, BigInt)], f: &BigInt) -> SparseRow<BigInt> {
    row.iter()
        .map(|(c, x)| (*c, x * f))
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

fn add(a: &[(usize, BigInt)], b: &[(usize, BigInt)]) -> SparseRow<BigInt> {
    axpy(a, &-BigInt::one(), b)
}

fn dense_invariant_factors(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let m = a.len();
    let n = cols;
    let mut diag = Vec::new();
    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&a, (t..m).flat_map(|i| (t..n).map(move |j| (i, j)))) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);
        loop {
            let p = a[t][t].clone();
            let mut clean = true;
            for i in t + 1..m {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&p);
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                    *x -= &q * y;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&p);
                for row in a.iter_mut().skip(t) {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                clean &= a[t][j].is_zero();
            }
            if clean {
                break;
            }
            let cands = (t..m).map(|i| (i, t)).chain((t + 1..n).map(|j| (t, j)));
            let (pi, pj) = min_entry(&a, cands).expect("pivot is nonzero");
            a.swap(t, pi);
            swap_cols(&mut a, t, pj);
        }
        diag.push(a[t][t].abs());
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

fn min_entry(
    a: &[Vec<BigInt>],
    cands: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for (i, j) in cands {
        let x = &a[i][j];
        if x.is_zero() {
            continue;
        }
        let ax = x.abs();
        if best.as_ref().is_none_or(|(_, b)| ax < *b) {
            let done = ax.is_one();
            best = Some(((i, j), ax));
            if done {
                break;
            }
        }
    }
    best.map(|(p, _)| p)
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a {
            row.swap(i, j);
        }
    }
}
