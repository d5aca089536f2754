//! Seeded random operators for property checks and benchmarks.

use num_rational::BigRational;
use num_traits::One;
use rand::Rng;

use super::operator::{OpKey, TruncatedOperator};

/// Shape limits for random operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperatorShape {
    pub precision: u32,
    pub max_x_degree: u32,
    pub max_d_degree: u32,
    pub max_terms: usize,
}

impl OperatorShape {
    pub fn new(precision: u32, max_d_degree: u32) -> Self {
        Self { precision, max_x_degree: 3, max_d_degree, max_terms: 5 }
    }
}

/// Nonzero `n / m` with `|n| <= 5`, `1 <= m <= 3`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> BigRational {
    let mut n = 0;
    while n == 0 {
        n = rng.random_range(-5i64..=5);
    }
    BigRational::new(n.into(), rng.random_range(1i64..=3).into())
}

fn random_key<R: Rng + ?Sized>(rng: &mut R, shape: &OperatorShape) -> OpKey {
    let xd = rng.random_range(0..=shape.max_x_degree.min(shape.precision - 1));
    let i1 = rng.random_range(0..=xd);
    let dd = rng.random_range(0..=shape.max_d_degree);
    let k1 = rng.random_range(0..=dd);
    [i1, xd - i1, k1, dd - k1]
}

/// A nonzero operator whose `d_bound` is its actual derivative degree.
pub fn random_operator<R: Rng + ?Sized>(rng: &mut R, shape: &OperatorShape) -> TruncatedOperator {
    loop {
        let n = rng.random_range(1..=shape.max_terms);
        let terms: Vec<_> = (0..n).map(|_| (random_key(rng, shape), random_rational(rng))).collect();
        let d = terms.iter().map(|(k, _)| k[2] + k[3]).max().unwrap_or(0);
        let op = TruncatedOperator::from_terms(terms, shape.precision, d).expect("within bound");
        if !op.is_zero() {
            let d = op.max_d_degree().unwrap_or(0);
            return op.with_d_bound(d).expect("tightening to the actual degree");
        }
    }
}

/// Monic with Gamma-order `(k, l)`: `d1^k d2^l` plus random terms of
/// lower `d2`-degree, or of `d2`-degree `l` and lower `d1`-degree.
pub fn random_gamma_monic<R: Rng + ?Sized>(rng: &mut R, k: u32, l: u32, precision: u32) -> TruncatedOperator {
    let mut terms = vec![([0, 0, k, l], BigRational::one())];
    for _ in 0..rng.random_range(0..4) {
        let xd = rng.random_range(0..=2u32.min(precision - 1));
        let i1 = rng.random_range(0..=xd);
        let key = if l > 0 && rng.random_bool(0.5) {
            [i1, xd - i1, rng.random_range(0..=k + 1), rng.random_range(0..l)]
        } else if k > 0 {
            [i1, xd - i1, rng.random_range(0..k), l]
        } else {
            continue;
        };
        terms.push((key, random_rational(rng)));
    }
    let d = terms.iter().map(|(key, _)| key[2] + key[3]).max().unwrap_or(0);
    TruncatedOperator::from_terms(terms, precision, d).expect("within bound")
}

/// Random `p_s d2^s` terms for `s <= top` with `|k| - |i| <= order`.
fn lower_terms<R: Rng + ?Sized>(rng: &mut R, top: Option<u32>, order: u32, precision: u32) -> Vec<(OpKey, BigRational)> {
    let Some(top) = top else {
        return vec![];
    };
    let mut out = vec![];
    for _ in 0..rng.random_range(0..4) {
        let s = rng.random_range(0..=top);
        let k1 = rng.random_range(0..=order.saturating_sub(s) + 1);
        let xd = rng.random_range((s + k1).saturating_sub(order)..=(s + k1).saturating_sub(order) + 2).min(precision - 1);
        let i1 = rng.random_range(0..=xd);
        let key = [i1, xd - i1, k1, s];
        if key[2] + key[3] <= order + xd {
            out.push((key, random_rational(rng)));
        }
    }
    out
}

/// A normalized pair with `k` in `1..=3` and `l` in `0..=2`.
pub fn random_normalized_pair<R: Rng + ?Sized>(rng: &mut R, precision: u32) -> (TruncatedOperator, TruncatedOperator) {
    let k = rng.random_range(1..=3u32);
    let l = rng.random_range(0..=2u32);
    let mut p_terms = vec![([0, 0, 0, k], BigRational::one())];
    p_terms.extend(lower_terms(rng, k.checked_sub(2), k, precision));
    let mut q_terms = vec![([0, 0, 1, l], BigRational::one())];
    q_terms.extend(lower_terms(rng, l.checked_sub(1), 1 + l, precision));
    let build = |terms: Vec<(OpKey, BigRational)>| {
        let d = terms.iter().map(|(key, _)| key[2] + key[3]).max().unwrap_or(0);
        TruncatedOperator::from_terms(terms, precision, d).expect("within bound")
    };
    (build(p_terms), build(q_terms))
}

/// `sum_{n<T} (-x1)^n / n! d1^n`, a truncation of an operator `delta`
/// with `delta * x1 = 0`.
pub fn delta_operator(precision: u32) -> TruncatedOperator {
    let mut fact = BigRational::one();
    let mut terms = Vec::new();
    for n in 0..precision {
        if n > 0 {
            fact *= BigRational::from_integer(n.into());
        }
        let sign = if n % 2 == 0 { BigRational::one() } else { -BigRational::one() };
        terms.push(([n, 0, n, 0], sign / &fact));
    }
    TruncatedOperator::from_terms(terms, precision, precision - 1).expect("within bound")
}
