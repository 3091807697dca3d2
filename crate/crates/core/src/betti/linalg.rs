//! Exact rank of sparse integer matrices over the rationals.
//!
//! Rows are reduced fraction-free against earlier pivot rows and divided by
//! their content after every step, which keeps entries small on boundary
//! matrices. Arithmetic runs in `i64` and restarts in `BigInt` if anything
//! overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row: `(column, coefficient)` pairs with strictly increasing
/// columns and no zero coefficients.
pub type SparseRow = Vec<(usize, i64)>;

trait Scalar: Clone + Eq + Zero + One + Signed + Integer {
    fn from_i64(x: i64) -> Self;
    /// `a * x - b * y`, or `None` on overflow.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
}

impl Scalar for i64 {
    fn from_i64(x: i64) -> Self {
        x
    }

    fn mul_sub(a: &i64, x: &i64, b: &i64, y: &i64) -> Option<i64> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
}

impl Scalar for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn mul_sub(a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }
}

/// Rank over Q of the matrix whose rows are given.
pub fn rank(rows: &[SparseRow]) -> usize {
    rank_in::<i64>(rows)
        .or_else(|| rank_in::<BigInt>(rows))
        .expect("big integer elimination cannot overflow")
}

fn rank_in<T: Scalar>(rows: &[SparseRow]) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for row in rows {
        let mut row: Vec<(usize, T)> = row
            .iter()
            .filter(|(_, c)| *c != 0)
            .map(|&(j, c)| (j, T::from_i64(c)))
            .collect();
        while let Some((lead, _)) = row.first() {
            match pivots.get(lead) {
                Some(pivot) => row = eliminate(&row, pivot)?,
                None => {
                    pivots.insert(*lead, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

/// Cancels the shared leading entry of `row` using `pivot`, then strips the
/// content of the result.
fn eliminate<T: Scalar>(row: &[(usize, T)], pivot: &[(usize, T)]) -> Option<Vec<(usize, T)>> {
    let a = &pivot[0].1;
    let b = &row[0].1;
    let g = a.gcd(b);
    let (ra, rb) = (a.div_floor(&g), b.div_floor(&g));
    let zero = T::zero();
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut k) = (1, 1);
    while i < row.len() || k < pivot.len() {
        let (col, x, y) = match (row.get(i), pivot.get(k)) {
            (Some((cr, x)), Some((cp, _))) if cr < cp => {
                i += 1;
                (*cr, x, &zero)
            }
            (Some((cr, x)), Some((cp, y))) if cr == cp => {
                i += 1;
                k += 1;
                (*cr, x, y)
            }
            (_, Some((cp, y))) => {
                k += 1;
                (*cp, &zero, y)
            }
            (Some((cr, x)), None) => {
                i += 1;
                (*cr, x, &zero)
            }
            (None, None) => unreachable!(),
        };
        let v = T::mul_sub(&ra, x, &rb, y)?;
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    let content = out
        .iter()
        .fold(T::zero(), |acc, (_, v)| acc.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in &mut out {
            *v = v.div_floor(&content);
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(rows: &[&[i64]]) -> Vec<SparseRow> {
        rows.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(j, &c)| (j, c))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&dense(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&dense(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&dense(&[&[2, 0, 3], &[0, 5, 7], &[2, 5, 10]])), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn boundary_of_triangle() {
        // Edges ab, ac, bc onto vertices a, b, c: rank 2.
        assert_eq!(rank(&dense(&[&[-1, 1, 0], &[-1, 0, 1], &[0, -1, 1]])), 2);
    }

    #[test]
    fn overflow_falls_back_to_big_integers() {
        let big = i64::MAX / 3;
        let rows = dense(&[&[big, big - 1, 1], &[big - 1, big, 1], &[1, 1, big]]);
        assert_eq!(rank(&rows), 3);
        assert_eq!(rank_in::<BigInt>(&rows), Some(3));
        let dep = dense(&[&[big, big - 1], &[2 * (big / 2), 2 * ((big - 1) / 2)]]);
        assert_eq!(rank(&dep), rank_in::<BigInt>(&dep).unwrap());
    }

    /// Gaussian elimination over exact fractions as an independent check.
    fn rational_rank(m: &[Vec<i64>]) -> usize {
        use num_rational_free::rank_fractions;
        rank_fractions(m)
    }

    mod num_rational_free {
        // Fractions as (numerator, denominator) i128 pairs; fine for the tiny
        // matrices proptest generates.
        fn reduce(n: i128, d: i128) -> (i128, i128) {
            let g = num_integer::gcd(n, d).max(1);
            let s = if d < 0 { -1 } else { 1 };
            (s * n / g, s * d / g)
        }

        pub fn rank_fractions(m: &[Vec<i64>]) -> usize {
            let mut a: Vec<Vec<(i128, i128)>> = m
                .iter()
                .map(|r| r.iter().map(|&x| (x as i128, 1)).collect())
                .collect();
            let rows = a.len();
            let cols = a.first().map_or(0, Vec::len);
            let mut r = 0;
            for c in 0..cols {
                let Some(p) = (r..rows).find(|&i| a[i][c].0 != 0) else {
                    continue;
                };
                a.swap(r, p);
                for i in 0..rows {
                    if i != r && a[i][c].0 != 0 {
                        let (fn_, fd) = reduce(a[i][c].0 * a[r][c].1, a[i][c].1 * a[r][c].0);
                        for j in 0..cols {
                            let (pn, pd) = a[r][j];
                            let (xn, xd) = a[i][j];
                            a[i][j] = reduce(xn * pd * fd - fn_ * pn * xd, xd * pd * fd);
                        }
                    }
                }
                r += 1;
            }
            r
        }
    }

    proptest::proptest! {
        #[test]
        fn agrees_with_fraction_elimination(
            m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 0..6)
        ) {
            let rows: Vec<SparseRow> = m
                .iter()
                .map(|r| r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (j, c)).collect())
                .collect();
            proptest::prop_assert_eq!(rank(&rows), rational_rank(&m));
        }
    }
}
