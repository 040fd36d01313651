//! Exact rank over ℚ of integer matrices.
//!
//! Fraction-free elimination in `i128` with row-gcd normalization; on
//! overflow the same elimination is rerun over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Rank over ℚ of a dense integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match rank_small(m) {
        Some(r) => r,
        None => rank_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn rank_small(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len())
            .filter(|&i| m[i][c] != 0)
            .min_by_key(|&i| m[i][c].unsigned_abs())
        else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c];
        for i in r + 1..m.len() {
            let a = m[i][c];
            if a == 0 {
                continue;
            }
            let g = pivot.gcd(&a);
            let (s, t) = (pivot / g, a / g);
            let mut row_gcd = 0i128;
            for j in c..cols {
                let v = m[i][j].checked_mul(s)?.checked_sub(m[r][j].checked_mul(t)?)?;
                m[i][j] = v;
                row_gcd = row_gcd.gcd(&v);
            }
            if row_gcd > 1 {
                for x in &mut m[i][c..] {
                    *x /= row_gcd;
                }
            }
        }
        r += 1;
    }
    Some(r)
}

fn rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).filter(|&i| !m[i][c].is_zero()).min_by_key(|&i| m[i][c].abs()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let g = pivot.gcd(&m[i][c]);
            let (s, t) = (&pivot / &g, &m[i][c] / &g);
            let mut row_gcd = BigInt::zero();
            for j in c..cols {
                let v = &m[i][j] * &s - &m[r][j] * &t;
                row_gcd = row_gcd.gcd(&v);
                m[i][j] = v;
            }
            if row_gcd > BigInt::from(1) {
                for x in &mut m[i][c..] {
                    *x = &*x / &row_gcd;
                }
            }
        }
        r += 1;
    }
    r
}

/// Matrix product of dense integer matrices.
pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner);
            (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), 3);
        assert_eq!(rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
    }

    #[test]
    fn big_fallback_agrees() {
        let big = i64::MAX / 3;
        let m = vec![vec![big, big - 1, 7], vec![big - 5, big, 3], vec![1, 1, 1]];
        let small = rank(&m);
        let b = rank_big(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect());
        assert_eq!(small, b);
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 4)) {
            let t: Vec<Vec<i64>> = (0..5).map(|j| m.iter().map(|r| r[j]).collect()).collect();
            prop_assert_eq!(rank(&m), rank(&t));
        }
    }
}
