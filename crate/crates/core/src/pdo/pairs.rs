//! Pair predicates (quasi-elliptic, normalized), recovery of the special
//! change relating two normalized pairs, the rank GCD, and the right action
//! on the spectral module `k[d1, d2]`.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::change::LinearChange;
use super::operator::{d_degree, OpKey, TruncatedOperator};
use super::order::{a1_check, bold_ord, highest_term, is_monic, ord2, ord_gamma, BoldOrder};
use crate::error::PdoError;

/// Monic `P, Q` with `ord_Gamma(P) = (0, k)`, `k >= 1`, and `ord_Gamma(Q) = (1, l)`.
pub fn is_quasi_elliptic_pair(p: &TruncatedOperator, q: &TruncatedOperator) -> bool {
    matches!((ord_gamma(p), ord_gamma(q)), (Ok((0, k)), Ok((1, _))) if k >= 1) && is_monic(p) && is_monic(q)
}

/// Quasi-elliptic with `P` in `A1(k)` and `Q` in `A1(1 + l)`.
pub fn is_one_quasi_elliptic_pair(p: &TruncatedOperator, q: &TruncatedOperator) -> bool {
    if !is_quasi_elliptic_pair(p, q) {
        return false;
    }
    let (Ok((_, k)), Ok((_, l))) = (ord_gamma(p), ord_gamma(q)) else {
        return false;
    };
    a1_check(p, k as i64) && a1_check(q, 1 + l as i64)
}

/// `P = d2^k + sum_{s<=k-2} p_s d2^s`, `Q = d1 d2^l + sum_{s<l} q_s d2^s`,
/// and the pair is 1-quasi-elliptic.
pub fn is_normalized_pair(p: &TruncatedOperator, q: &TruncatedOperator) -> bool {
    if !is_one_quasi_elliptic_pair(p, q) {
        return false;
    }
    let Ok(k) = ord2(p) else {
        return false;
    };
    let ht_p = highest_term(p).expect("nonzero");
    let ht_q = highest_term(q).expect("nonzero");
    let no_subleading = p.terms().keys().all(|key| key[3] + 1 != k);
    ht_p == TruncatedOperator::one(p.precision(), p.d_bound())
        && ht_q.terms().len() == 1
        && ht_q.coefficient(&[0, 0, 1, 0]).is_some_and(BigRational::is_one)
        && no_subleading
}

/// The special change `(b, c, d)` that carries some normalized pair to
/// `(P, Q)`, read off from leading data: the `d2^{k-1}` coefficient of `P`
/// is `k (c d1 + b)` and the `d2^l` coefficient of `Q` is `d1 + d`.
/// Returns `None` if the pair does not have this shape.
pub fn renormalizing_change(p: &TruncatedOperator, q: &TruncatedOperator) -> Option<LinearChange> {
    let k = ord2(p).ok()?;
    let l = ord2(q).ok()?;
    if k == 0 {
        return None;
    }
    let kk = BigRational::from_integer(k.into());
    let get = |op: &TruncatedOperator, key: OpKey| op.coefficient(&key).cloned().unwrap_or_else(BigRational::zero);
    let c = get(p, [0, 0, 1, k - 1]) / &kk;
    let b = get(p, [0, 0, 0, k - 1]) / &kk;
    let d = get(q, [0, 0, 0, l]);
    let change = LinearChange::special(b, c, d);
    Some(change)
}

/// Applies the inverse of [`renormalizing_change`] and checks the result
/// is a normalized pair.
pub fn renormalize(p: &TruncatedOperator, q: &TruncatedOperator) -> Option<(TruncatedOperator, TruncatedOperator)> {
    let back = renormalizing_change(p, q)?.inverse();
    let (p0, q0) = (back.apply(p), back.apply(q));
    is_normalized_pair(&p0, &q0).then_some((p0, q0))
}

/// Divides by the leading coefficient at the Gamma-order when it is a
/// nonzero constant.
pub fn make_monic(p: &TruncatedOperator) -> Option<TruncatedOperator> {
    let (k, l) = ord_gamma(p).ok()?;
    let lead: Vec<_> = p.terms().iter().filter(|(key, _)| key[2] == k && key[3] == l).collect();
    if lead.len() != 1 || *lead[0].0 != [0, 0, k, l] {
        return None;
    }
    Some(p.scale(&lead[0].1.recip()))
}

/// `gcd { ord_2(b) : ord_Gamma(b) = (0, ord_2 b), ord(b) = ord_2(b) }`
/// over the given generators; 0 if none qualify.
pub fn rank_gcd(generators: &[TruncatedOperator]) -> u32 {
    generators
        .iter()
        .filter_map(|b| {
            let (k, l) = ord_gamma(b).ok()?;
            let bold = bold_ord(b).ok()?;
            (k == 0 && bold == BoldOrder::Finite(l as i64)).then_some(l)
        })
        .fold(0, |acc, l| acc.gcd(&l))
}

/// A class in `k[d1, d2]`, the quotient of the operator ring by the right
/// ideal generated by `x1, x2`.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement(BTreeMap<[u32; 2], BigRational>);

impl ModuleElement {
    pub fn from_terms<I: IntoIterator<Item = ([u32; 2], BigRational)>>(terms: I) -> Self {
        let mut map: BTreeMap<[u32; 2], BigRational> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self(map)
    }

    pub fn monomial(k1: u32, k2: u32) -> Self {
        Self::from_terms([([k1, k2], BigRational::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 2], BigRational> {
        &self.0
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.keys().map(|k| k[0] + k[1]).max()
    }

    fn as_operator(&self, precision: u32) -> TruncatedOperator {
        let d = self.degree().unwrap_or(0);
        TruncatedOperator::from_terms(self.0.iter().map(|(k, c)| ([0, 0, k[0], k[1]], c.clone())), precision, d)
            .expect("degree within bound")
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_operator(1))
    }
}

/// `f * P` reduced modulo `x1, x2`. Only coefficients of `P` of x-degree
/// at most `deg f` survive, so the precision must exceed `deg f`.
pub fn spectral_module_action(f: &ModuleElement, p: &TruncatedOperator) -> Result<ModuleElement, PdoError> {
    let prod = f.as_operator(p.precision()).mul(p)?;
    Ok(ModuleElement::from_terms(
        prod.terms().iter().filter(|(k, _)| k[0] == 0 && k[1] == 0).map(|(k, c)| ([k[2], k[3]], c.clone())),
    ))
}

/// Total derivative degree of the top part of a module element.
pub fn module_degree(f: &ModuleElement) -> Option<u32> {
    f.terms().keys().map(|k| d_degree(&[0, 0, k[0], k[1]])).max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pdo::parse::parse_operator;

    fn p(s: &str) -> TruncatedOperator {
        parse_operator(s, 12, 6).unwrap()
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn pair_examples() {
        assert!(is_quasi_elliptic_pair(&p("d2^2"), &p("d1 d2")));
        assert!(is_one_quasi_elliptic_pair(&p("d2^2"), &p("d1 d2")));
        assert!(is_normalized_pair(&p("d2^2"), &p("d1 d2")));
        assert_eq!(bold_ord(&p("d2^2")), Ok(BoldOrder::Finite(2)));
        assert_eq!(bold_ord(&p("d1 d2")), Ok(BoldOrder::Finite(2)));
        assert!(!is_normalized_pair(&p("d2^2 + d2"), &p("d1")));
        assert!(is_quasi_elliptic_pair(&p("d2^2 + d2"), &p("d1")));
        assert!(!is_quasi_elliptic_pair(&p("1"), &p("d1")));
        assert!(!is_quasi_elliptic_pair(&p("x1 d2^2"), &p("d1 d2")));
        // d1^3 breaks A1(1 + l) for Q of Gamma-order (1, 1)
        assert!(is_quasi_elliptic_pair(&p("d2^2"), &p("d1 d2 + d1^3")));
        assert!(!is_one_quasi_elliptic_pair(&p("d2^2"), &p("d1 d2 + d1^3")));
        assert!(!is_normalized_pair(&p("d2^2"), &p("d1 d2 + d2")));
        assert!(is_normalized_pair(&p("d2^3 + x1 d1 d2 + d1"), &p("d1 d2^2 + x2 d2 + 7")));
    }

    #[test]
    fn special_change_and_renormalization() {
        let (p0, q0) = (p("d2^2 + x1 d1"), p("d1 d2 + x2 d1 + 3"));
        assert!(is_normalized_pair(&p0, &q0));
        let phi = LinearChange::special(int(2), int(1), int(-1));
        let (p1, q1) = (phi.apply(&p0), phi.apply(&q0));
        // the d2^{k-1} term 2 d1 d2 + 4 d2 appears
        assert!(!is_normalized_pair(&p1, &q1));
        assert!(is_one_quasi_elliptic_pair(&p1, &q1));
        assert_eq!(renormalizing_change(&p1, &q1), Some(phi));
        assert_eq!(renormalize(&p1, &q1), Some((p0, q0)));
    }

    #[test]
    fn monic_rescaling() {
        assert_eq!(make_monic(&p("3 d2^2 + x1")), Some(p("d2^2 + 1/3 x1")));
        assert_eq!(make_monic(&p("x1 d2^2")), None);
    }

    #[test]
    fn rank_gcd_examples() {
        assert_eq!(rank_gcd(&[p("d2^2"), p("d2^3"), p("d1 d2")]), 1);
        assert_eq!(rank_gcd(&[p("d2^2"), p("d2^4 + x1 d1")]), 2);
        assert_eq!(rank_gcd(&[p("d1")]), 0);
    }

    #[test]
    fn module_action_examples() {
        let d1 = ModuleElement::monomial(1, 0);
        assert_eq!(spectral_module_action(&d1, &p("d1")).unwrap(), ModuleElement::monomial(2, 0));
        assert_eq!(spectral_module_action(&d1, &p("x1 d1")).unwrap(), ModuleElement::monomial(1, 0));
        assert!(spectral_module_action(&d1, &p("x2 d1")).unwrap().is_zero());
        let one = ModuleElement::monomial(0, 0);
        assert_eq!(spectral_module_action(&one, &p("d2^2 + x1 d1")).unwrap(), ModuleElement::monomial(0, 2));
        assert_eq!(module_degree(&ModuleElement::monomial(2, 3)), Some(5));
    }
}
