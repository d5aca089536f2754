//! Bounded exhaustive solvers for the three small integer systems that
//! appear in the divisor analysis.
//!
//! Every system here has at most a few hundred candidates, so plain
//! enumeration of the box is both the algorithm and the proof.

use crate::picard::{e8_roots, PicardClass};

/// An axis-aligned integer box together with one linear condition
/// `sum coefficients[i] * x[i] = target`, optionally taken modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxConstraint {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
    pub coefficients: Vec<i64>,
    pub target: i64,
    pub modulus: Option<i64>,
}

impl BoxConstraint {
    pub fn satisfied_by(&self, x: &[i64]) -> bool {
        let inside = x
            .iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(v, (lo, hi))| lo <= v && v <= hi);
        if !inside {
            return false;
        }
        let lhs: i64 = self.coefficients.iter().zip(x).map(|(c, v)| c * v).sum();
        match self.modulus {
            Some(m) => (lhs - self.target).rem_euclid(m) == 0,
            None => lhs == self.target,
        }
    }
}

/// Every integer point of `[lower, upper]`, first coordinate slowest.
pub fn box_points(lower: &[i64], upper: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if lower.iter().zip(upper).any(|(lo, hi)| lo > hi) {
        return out;
    }
    let mut cur = lower.to_vec();
    loop {
        out.push(cur.clone());
        let mut k = cur.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < upper[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = lower[k];
        }
    }
}

pub fn solve_box(lower: &[i64], upper: &[i64], constraints: &[BoxConstraint]) -> Vec<Vec<i64>> {
    box_points(lower, upper)
        .into_iter()
        .filter(|x| constraints.iter().all(|c| c.satisfied_by(x)))
        .collect()
}

/// Non-negative `(n1..n4)` with `sum n_i = 5` and `sum i*n_i = 0 (mod 5)`.
pub fn monomial_constraints() -> [BoxConstraint; 2] {
    let lower = vec![0; 4];
    let upper = vec![5; 4];
    [
        BoxConstraint {
            lower: lower.clone(),
            upper: upper.clone(),
            coefficients: vec![1, 1, 1, 1],
            target: 5,
            modulus: None,
        },
        BoxConstraint { lower, upper, coefficients: vec![1, 2, 3, 4], target: 0, modulus: Some(5) },
    ]
}

/// Solutions in descending lexicographic order.
pub fn solve_monomial_system() -> Vec<[u8; 4]> {
    let mut sols: Vec<[u8; 4]> = solve_box(&[0; 4], &[5; 4], &monomial_constraints())
        .into_iter()
        .map(|x| [x[0] as u8, x[1] as u8, x[2] as u8, x[3] as u8])
        .collect();
    sols.sort_unstable_by(|a, b| b.cmp(a));
    sols
}

/// `5(m+n) - 2mn = 15` over `0 <= m, n <= 5` (smooth quadric case).
pub fn solve_smooth_quadric_case() -> Vec<(i64, i64)> {
    box_points(&[0, 0], &[5, 5])
        .into_iter()
        .map(|x| (x[0], x[1]))
        .filter(|&(m, n)| 5 * (m + n) - 2 * m * n == 15)
        .collect()
}

/// `m(m - 2n) + 5n = 15` over `0 <= m <= 5`, `0 <= n <= 10` (quadric cone case).
pub fn solve_cone_case() -> Vec<(i64, i64)> {
    box_points(&[0, 0], &[5, 10])
        .into_iter()
        .map(|x| (x[0], x[1]))
        .filter(|&(m, n)| m * (m - 2 * n) + 5 * n == 15)
        .collect()
}

/// Order of the group acting freely on the quintic.
pub const COVER_DEGREE: i64 = 5;

/// `(M1, M2)` for `M1 = K + E`, `M2 = K - E + alpha`, with `E` the first root.
pub fn curve_pair_intersection() -> i64 {
    let e = e8_roots()[0];
    let m1 = PicardClass::canonical() + PicardClass::from_root(e, 0);
    let m2 = PicardClass::canonical() - PicardClass::from_root(e, 0) + PicardClass::torsion(1);
    m1.intersect(&m2)
}

/// Intersection of the pulled-back curves on the quintic: `5 * (M1, M2) = 15`.
pub fn intersection_identity() -> i64 {
    COVER_DEGREE * curve_pair_intersection()
}
