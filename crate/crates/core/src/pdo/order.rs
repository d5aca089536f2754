//! Order functions on truncated operators: the x-adic order of a
//! coefficient, the total order, the grading and symbol, the Gamma-order
//! and the growth condition `A1(m)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::operator::{d_degree, excess, x_degree, TruncatedOperator};
use crate::arith::SparsePolynomial;
use crate::error::PdoError;

/// `sup(|k| - ord_M(a_k))`, which is `-inf` for the zero operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BoldOrder {
    NegInfinity,
    Finite(i64),
}

impl Add for BoldOrder {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (BoldOrder::Finite(a), BoldOrder::Finite(b)) => BoldOrder::Finite(a + b),
            _ => BoldOrder::NegInfinity,
        }
    }
}

impl fmt::Display for BoldOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoldOrder::NegInfinity => write!(f, "-inf"),
            BoldOrder::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// Lowest total degree of a nonzero term; `None` stands for `+inf`.
pub fn ord_m(poly: &SparsePolynomial<BigRational>) -> Option<u32> {
    poly.min_total_degree()
}

/// `ord_M` of the coefficient of every `d1^k1 d2^k2` that occurs.
pub fn ord_m_profile(p: &TruncatedOperator) -> BTreeMap<(u32, u32), u32> {
    let mut out = BTreeMap::new();
    for key in p.terms().keys() {
        let slot = out.entry((key[2], key[3])).or_insert(u32::MAX);
        *slot = (*slot).min(x_degree(key));
    }
    out
}

/// The supremum over stored terms only; no decidability check.
pub fn stored_order(p: &TruncatedOperator) -> BoldOrder {
    p.max_excess().map_or(BoldOrder::NegInfinity, BoldOrder::Finite)
}

/// Smallest excess an unstored term could have: `d_bound - T`.
pub fn frontier(p: &TruncatedOperator) -> i64 {
    p.d_bound() as i64 - p.precision() as i64
}

/// Total order. Unknown terms have `|i| >= T` and `|k| <= d_bound`, so a
/// stored supremum below `d_bound - T` could still be overtaken. An
/// operator with no stored terms is taken to be zero.
pub fn bold_ord(p: &TruncatedOperator) -> Result<BoldOrder, PdoError> {
    match p.max_excess() {
        None => Ok(BoldOrder::NegInfinity),
        Some(s) if s >= frontier(p) => Ok(BoldOrder::Finite(s)),
        Some(_) => Err(PdoError::Undecidable { precision: p.precision(), d_bound: p.d_bound() }),
    }
}

/// `P_m`: terms with `|i| - |k| = m`.
pub fn homogeneous_component(p: &TruncatedOperator, m: i64) -> TruncatedOperator {
    p.filter_terms(|k| -excess(k) == m)
}

/// All nonzero homogeneous components, keyed by degree.
pub fn components(p: &TruncatedOperator) -> BTreeMap<i64, TruncatedOperator> {
    let degrees: std::collections::BTreeSet<i64> = p.terms().keys().map(|k| -excess(k)).collect();
    degrees.into_iter().map(|m| (m, homogeneous_component(p, m))).collect()
}

/// `sigma(P) = P_{-ord P}`. Requires the stored supremum to lie strictly
/// above the frontier so that no unstored term shares its degree.
pub fn symbol(p: &TruncatedOperator) -> Result<TruncatedOperator, PdoError> {
    match p.max_excess() {
        None => Ok(p.clone()),
        Some(s) if s > frontier(p) => Ok(homogeneous_component(p, -s)),
        Some(_) => Err(PdoError::Undecidable { precision: p.precision(), d_bound: p.d_bound() }),
    }
}

pub fn is_homogeneous(p: &TruncatedOperator) -> bool {
    components(p).len() <= 1
}

/// `ord_2(P)`: the top power of `d2` among stored terms.
pub fn ord2(p: &TruncatedOperator) -> Result<u32, PdoError> {
    p.terms().keys().map(|k| k[3]).max().ok_or(PdoError::ZeroOperator)
}

/// `HT_2(P) = p_l` for `P = sum_{s<=l} p_s d2^s`, returned as an operator
/// in `x1, x2, d1`.
pub fn highest_term(p: &TruncatedOperator) -> Result<TruncatedOperator, PdoError> {
    let l = ord2(p)?;
    let terms = p.terms().iter().filter(|(k, _)| k[3] == l).map(|(k, c)| ([k[0], k[1], k[2], 0], c.clone()));
    TruncatedOperator::from_terms(terms, p.precision(), p.d_bound())
}

/// `(k, l)` with `l = ord_2(P)` and `k` the `d1`-order of `HT_2(P)`.
pub fn ord_gamma(p: &TruncatedOperator) -> Result<(u32, u32), PdoError> {
    let l = ord2(p)?;
    let k = p.terms().keys().filter(|key| key[3] == l).map(|key| key[2]).max().expect("l is attained");
    Ok((k, l))
}

/// The coefficient of `d1^k d2^l` at the Gamma-order is exactly 1.
pub fn is_monic(p: &TruncatedOperator) -> bool {
    let Ok((k, l)) = ord_gamma(p) else {
        return false;
    };
    let lead: Vec<_> = p.terms().iter().filter(|(key, _)| key[2] == k && key[3] == l).collect();
    lead.len() == 1 && *lead[0].0 == [0, 0, k, l] && lead[0].1.is_one()
}

/// `A1(m)`: `ord_M(q_ij) >= i + j - m` for every stored coefficient.
pub fn a1_check(p: &TruncatedOperator, m: i64) -> bool {
    p.terms().keys().all(|k| x_degree(k) as i64 >= d_degree(k) as i64 - m)
}

/// Smallest `m` with `A1(m)`; this is the stored order.
pub fn a1_index(p: &TruncatedOperator) -> BoldOrder {
    stored_order(p)
}

/// The order data of one operator, with `None` where undefined or
/// undecidable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderValue {
    pub gamma: Option<(u32, u32)>,
    pub bold: Option<BoldOrder>,
    pub ord2: Option<u32>,
    pub ord_m_profile: BTreeMap<(u32, u32), u32>,
}

pub fn order_value(p: &TruncatedOperator) -> OrderValue {
    OrderValue {
        gamma: ord_gamma(p).ok(),
        bold: bold_ord(p).ok(),
        ord2: ord2(p).ok(),
        ord_m_profile: ord_m_profile(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pdo::parse::parse_operator;

    fn p(s: &str) -> TruncatedOperator {
        parse_operator(s, 12, 6).unwrap()
    }

    #[test]
    fn ord_m_examples() {
        assert_eq!(ord_m(&p("1").coefficient_poly(0, 0)), Some(0));
        assert_eq!(ord_m(&p("x1^2 x2").coefficient_poly(0, 0)), Some(3));
        assert_eq!(ord_m(&p("x1 + x2^3").coefficient_poly(0, 0)), Some(1));
        assert_eq!(ord_m(&p("d1").coefficient_poly(0, 0)), None);
    }

    #[test]
    fn bold_order_examples() {
        assert_eq!(bold_ord(&p("d1")), Ok(BoldOrder::Finite(1)));
        assert_eq!(bold_ord(&p("x1 d1")), Ok(BoldOrder::Finite(0)));
        assert_eq!(bold_ord(&p("x1^2 d1 d2")), Ok(BoldOrder::Finite(0)));
        assert_eq!(bold_ord(&p("0")), Ok(BoldOrder::NegInfinity));
        // x1^11 at T = 12, d <= 6 could be beaten by x1^12 d1^6
        assert!(matches!(bold_ord(&p("x1^11")), Err(PdoError::Undecidable { .. })));
        assert!(BoldOrder::NegInfinity < BoldOrder::Finite(-100));
    }

    #[test]
    fn symbols() {
        assert_eq!(symbol(&p("d2^2 + x1 d1")).unwrap(), p("d2^2"));
        let h = p("x1 d1 + x2 d2");
        assert_eq!(symbol(&h).unwrap(), h);
        assert!(is_homogeneous(&h));
        let r = p("3 + x1 d1 - 2 x2^2 d1 + d1 d2 + x1^3");
        let back = components(&r).values().fold(TruncatedOperator::new(12, 6), |acc, c| acc.add(c));
        assert_eq!(back, r);
    }

    #[test]
    fn gamma_orders() {
        assert_eq!(ord_gamma(&p("d1 d2^3")), Ok((1, 3)));
        assert!(is_monic(&p("d1 d2^3")));
        assert_eq!(ord_gamma(&p("d2^2")), Ok((0, 2)));
        assert!(is_monic(&p("d2^2 + x1 d1")));
        assert_eq!(ord_gamma(&p("x1 d1 d2")), Ok((1, 1)));
        assert!(!is_monic(&p("x1 d1 d2")));
        assert!(!is_monic(&p("d1 d2 + x1 d1 d2")));
        assert_eq!(ord_gamma(&p("0")), Err(PdoError::ZeroOperator));
        assert_eq!(highest_term(&p("x1 d1 d2^2 + d2 + 5 d2^2")).unwrap(), p("5 + x1 d1"));
    }

    #[test]
    fn growth_condition() {
        assert!(a1_check(&p("x1^2 d1 d2"), 0));
        assert!(!a1_check(&p("d1 d2"), 1));
        assert!(a1_check(&p("d1 d2"), 2));
        assert_eq!(a1_index(&p("x1 d1^2 + d2")), BoldOrder::Finite(1));
    }

    #[test]
    fn profile() {
        let v = order_value(&p("x1 d1 + x2^2 d1 + d2"));
        assert_eq!(v.ord_m_profile.get(&(1, 0)), Some(&1));
        assert_eq!(v.ord_m_profile.get(&(0, 1)), Some(&0));
        assert_eq!(v.gamma, Some((0, 1)));
        assert_eq!(v.bold, Some(BoldOrder::Finite(1)));
    }
}
