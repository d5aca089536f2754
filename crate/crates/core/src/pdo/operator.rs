//! Truncated differential operators `sum a x1^i1 x2^i2 d1^k1 d2^k2` with
//! power-series coefficients known modulo `(x1, x2)^T`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::SparsePolynomial;
use crate::error::PdoError;

/// Exponents `(i1, i2, k1, k2)` of `x1^i1 x2^i2 d1^k1 d2^k2`.
pub type OpKey = [u32; 4];

pub fn x_degree(key: &OpKey) -> u32 {
    key[0] + key[1]
}

pub fn d_degree(key: &OpKey) -> u32 {
    key[2] + key[3]
}

/// `|k| - |i|`: the contribution of one term to the order.
pub fn excess(key: &OpKey) -> i64 {
    d_degree(key) as i64 - x_degree(key) as i64
}

/// An operator in normal form (coefficients to the left of derivatives).
///
/// Every stored key has `i1 + i2 < precision` and `k1 + k2 <= d_bound`;
/// terms of x-degree `>= precision` are unknown and not stored.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedOperator {
    terms: BTreeMap<OpKey, BigRational>,
    precision: u32,
    d_bound: u32,
}

fn falling(n: u32, r: u32) -> BigInt {
    (0..r).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j))
}

fn binomial(n: u32, r: u32) -> BigInt {
    falling(n, r) / falling(r, r)
}

impl TruncatedOperator {
    /// The zero operator at the given budget.
    pub fn new(precision: u32, d_bound: u32) -> Self {
        assert!(precision > 0, "precision must be positive");
        Self { terms: BTreeMap::new(), precision, d_bound }
    }

    pub fn from_terms<I>(terms: I, precision: u32, d_bound: u32) -> Result<Self, PdoError>
    where
        I: IntoIterator<Item = (OpKey, BigRational)>,
    {
        if precision == 0 {
            return Err(PdoError::BudgetExhausted(0));
        }
        let mut op = Self::new(precision, d_bound);
        for (key, c) in terms {
            if d_degree(&key) > d_bound {
                return Err(PdoError::DegreeBound { degree: d_degree(&key), bound: d_bound });
            }
            op.add_term(key, c);
        }
        Ok(op)
    }

    pub fn monomial(key: OpKey, coeff: BigRational, precision: u32, d_bound: u32) -> Result<Self, PdoError> {
        Self::from_terms([(key, coeff)], precision, d_bound)
    }

    pub fn one(precision: u32, d_bound: u32) -> Self {
        Self::monomial([0; 4], BigRational::one(), precision, d_bound).expect("constant fits any bound")
    }

    pub fn constant(c: BigRational, precision: u32, d_bound: u32) -> Self {
        Self::monomial([0; 4], c, precision, d_bound).expect("constant fits any bound")
    }

    pub fn x1(precision: u32, d_bound: u32) -> Self {
        Self::monomial([1, 0, 0, 0], BigRational::one(), precision, d_bound).expect("no derivatives")
    }

    pub fn x2(precision: u32, d_bound: u32) -> Self {
        Self::monomial([0, 1, 0, 0], BigRational::one(), precision, d_bound).expect("no derivatives")
    }

    pub fn d1(precision: u32, d_bound: u32) -> Result<Self, PdoError> {
        Self::monomial([0, 0, 1, 0], BigRational::one(), precision, d_bound)
    }

    pub fn d2(precision: u32, d_bound: u32) -> Result<Self, PdoError> {
        Self::monomial([0, 0, 0, 1], BigRational::one(), precision, d_bound)
    }

    /// Adds a term, dropping it if it lies beyond the precision.
    fn add_term(&mut self, key: OpKey, c: BigRational) {
        if x_degree(&key) >= self.precision || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn d_bound(&self) -> u32 {
        self.d_bound
    }

    pub fn terms(&self) -> &BTreeMap<OpKey, BigRational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// No term is stored: zero modulo the precision.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &OpKey) -> Option<&BigRational> {
        self.terms.get(key)
    }

    /// Highest stored derivative degree `k1 + k2`.
    pub fn max_d_degree(&self) -> Option<u32> {
        self.terms.keys().map(d_degree).max()
    }

    /// Highest stored `|k| - |i|`.
    pub fn max_excess(&self) -> Option<i64> {
        self.terms.keys().map(excess).max()
    }

    /// Coefficient of `d1^k1 d2^k2` as a polynomial in `x1, x2`.
    pub fn coefficient_poly(&self, k1: u32, k2: u32) -> SparsePolynomial<BigRational> {
        SparsePolynomial::from_terms(
            2,
            self.terms
                .iter()
                .filter(|(key, _)| key[2] == k1 && key[3] == k2)
                .map(|(key, c)| (vec![key[0], key[1]], c.clone())),
        )
    }

    /// Drops terms at or beyond the new precision (never raises it).
    pub fn truncate(&self, precision: u32) -> Self {
        let precision = precision.min(self.precision).max(1);
        let terms = self.terms.iter().filter(|(k, _)| x_degree(k) < precision).map(|(k, c)| (*k, c.clone())).collect();
        Self { terms, precision, d_bound: self.d_bound }
    }

    /// Same terms under a different derivative bound.
    pub fn with_d_bound(&self, d_bound: u32) -> Result<Self, PdoError> {
        if let Some(deg) = self.max_d_degree().filter(|&deg| deg > d_bound) {
            return Err(PdoError::DegreeBound { degree: deg, bound: d_bound });
        }
        Ok(Self { d_bound, ..self.clone() })
    }

    /// Equal modulo the coarser of the two precisions.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let t = self.precision.min(other.precision);
        self.truncate(t).terms == other.truncate(t).terms
    }

    pub fn filter_terms(&self, keep: impl Fn(&OpKey) -> bool) -> Self {
        let terms = self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (*k, c.clone())).collect();
        Self { terms, ..*self }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::new(self.precision.min(other.precision), self.d_bound.max(other.d_bound));
        for (k, c) in self.terms.iter().chain(&other.terms) {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::new(self.precision, self.d_bound);
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    /// Precision of `self * other`: derivatives of the left factor eat into
    /// the right factor's reliable x-degree, while the left factor's own
    /// unknown tail stays beyond its precision.
    pub fn product_precision(&self, other: &Self) -> i64 {
        match self.max_excess() {
            None => self.precision as i64,
            Some(s) => (self.precision as i64).min(other.precision as i64 - s),
        }
    }

    /// Leibniz product `(x^a d^k)(x^b d^m) = sum_r C(k,r) b!/(b-r)! x^{a+b-r} d^{k+m-r}`.
    pub fn mul(&self, other: &Self) -> Result<Self, PdoError> {
        let t = self.product_precision(other);
        if t <= 0 {
            return Err(PdoError::BudgetExhausted(t));
        }
        let mut out = Self::new(t as u32, self.d_bound + other.d_bound);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let base = ca * cb;
                for r1 in 0..=ka[2].min(kb[0]) {
                    let f1 = binomial(ka[2], r1) * falling(kb[0], r1);
                    for r2 in 0..=ka[3].min(kb[1]) {
                        let key = [
                            ka[0] + kb[0] - r1,
                            ka[1] + kb[1] - r2,
                            ka[2] + kb[2] - r1,
                            ka[3] + kb[3] - r2,
                        ];
                        if x_degree(&key) >= out.precision {
                            continue;
                        }
                        let f = &f1 * binomial(ka[3], r2) * falling(kb[1], r2);
                        out.add_term(key, &base * BigRational::from_integer(f));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Result<Self, PdoError> {
        let mut acc = Self::one(self.precision, 0);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `[self, other] = self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self, PdoError> {
        Ok(self.mul(other)?.sub(&other.mul(self)?))
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &BigRational, first: bool, bare: bool) -> fmt::Result {
    let sign = if c.is_negative() { "-" } else { "+" };
    match (first, c.is_negative()) {
        (true, false) => {}
        (true, true) => write!(f, "-")?,
        (false, _) => write!(f, " {sign} ")?,
    }
    let a = c.abs();
    if a.is_one() && !bare {
        return Ok(());
    }
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        write!(f, "{}/{}", a.numer(), a.denom())
    }
}

/// Prints terms in ascending key order, e.g. `2 d2^2 + x1 d1 - 1/3 x1^2 x2 d1 d2`.
impl fmt::Display for TruncatedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (key, c)) in self.terms.iter().enumerate() {
            let bare = key.iter().all(|&e| e == 0);
            write_coefficient(f, c, n == 0, bare)?;
            let mut need_space = !c.abs().is_one() || bare;
            for (name, &e) in ["x1", "x2", "d1", "d2"].iter().zip(key) {
                if e == 0 {
                    continue;
                }
                if need_space {
                    write!(f, " ")?;
                }
                need_space = true;
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [T={}, d<={}]", self, self.precision, self.d_bound)
    }
}
