//! Fraction-free (Bareiss) elimination: exact rank over ℚ without
//! building rationals.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Matrix;

/// Rank over ℚ and the pivot columns found along the way.
pub fn rank_with_pivots(m: &Matrix<i64>) -> (usize, Vec<usize>) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| m.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (r, pivots)
}

pub fn rank(m: &Matrix<i64>) -> usize {
    rank_with_pivots(m).0
}
