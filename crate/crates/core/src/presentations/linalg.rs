use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::snf::integer_echelon;

/// A sparse row: `(column, entry)` pairs with increasing columns and
/// nonzero entries.
pub(crate) type SparseRow<T> = Vec<(usize, T)>;

pub(crate) fn sparse<T: Zero>(row: Vec<T>) -> SparseRow<T> {
    row.into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .collect()
}

/// `a − f·b` for sparse rows.
pub(crate) fn axpy<T>(a: &[(usize, T)], f: &T, b: &[(usize, T)]) -> SparseRow<T>
where
    T: Zero + Clone,
    for<'x> &'x T: std::ops::Mul<&'x T, Output = T> + std::ops::Sub<&'x T, Output = T>,
{
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |x| x.0);
        let cb = b.get(j).map_or(usize::MAX, |x| x.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            let v = &T::zero() - &(f * &b[j].1);
            out.push((cb, v));
            j += 1;
        } else {
            let v = &a[i].1 - &(f * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over ℚ by Gaussian elimination.
pub fn rational_rank(rows: Vec<Vec<BigRational>>) -> usize {
    sparse_rank(rows.into_iter().map(sparse).collect())
}

/// Rank over ℚ of sparse rows. Each row is cleared of denominators and the
/// rank is read off an integer echelon form.
pub(crate) fn sparse_rank(rows: Vec<SparseRow<BigRational>>) -> usize {
    let integral = rows
        .into_iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
            row.into_iter()
                .map(|(c, x)| (c, (x * &l).to_integer()))
                .collect()
        })
        .collect();
    integer_echelon(integral).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<BigRational>> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|&x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rational_rank(q(&[])), 0);
        assert_eq!(rational_rank(q(&[&[0, 0]])), 0);
        assert_eq!(rational_rank(q(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rational_rank(q(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), 2);
        assert_eq!(rational_rank(q(&[&[2, 0], &[0, 3]])), 2);
        assert_eq!(
            rational_rank(q(&[&[0, 1, 1], &[0, 1, 0], &[1, 1, 1], &[1, 0, 0]])),
            3
        );
    }
}
