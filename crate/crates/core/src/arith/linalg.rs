//! Exact integer matrix helpers (rank, Bareiss determinant, minors).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank over the rationals.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] / &p;
                for c in col..ncols {
                    let delta = &f * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> =
        matrix.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Determinants of the upper-left `k x k` blocks, `k = 1..=n`.
pub fn leading_principal_minors(matrix: &[Vec<i64>]) -> Vec<BigInt> {
    (1..=matrix.len())
        .map(|k| {
            let block: Vec<Vec<i64>> = matrix[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(&block)
        })
        .collect()
}

/// Sylvester's criterion.
pub fn is_positive_definite(matrix: &[Vec<i64>]) -> bool {
    leading_principal_minors(matrix).iter().all(|m| m.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Cofactor expansion, used as an independent oracle.
    fn det_cofactor(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, &v)| v).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det_cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let mats = vec![
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]],
            vec![vec![1, 2], vec![2, 4]],
            vec![vec![0, 0, 1, 3], vec![2, 1, 0, 0], vec![1, 1, 1, 1], vec![5, -2, 3, 7]],
        ];
        for m in mats {
            assert_eq!(determinant(&m), BigInt::from(det_cofactor(&m)));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![1, 0, -1], vec![0, 1, -1], vec![1, 1, -2]]), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0, 0]]), 0);
    }

    #[test]
    fn a2_cartan_is_positive_definite() {
        assert!(is_positive_definite(&[vec![2, -1], vec![-1, 2]]));
        assert!(!is_positive_definite(&[vec![1, 2], vec![2, 1]]));
    }
}
