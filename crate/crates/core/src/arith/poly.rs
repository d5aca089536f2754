//! Sparse multivariate polynomials over a pluggable coefficient domain.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration is
//! always in lexicographic exponent order and no stored coefficient is zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::FieldElement;
use crate::error::ArithError;

/// The operations a coefficient domain has to supply.
///
/// Zero and one are produced from an existing value because prime-field
/// elements only know their modulus at runtime.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn mul_int(&self, n: u64) -> Self;
}

impl Coefficient for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn zero_like(&self) -> Self {
        0
    }
    fn one_like(&self) -> Self {
        1
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_int(&self, n: u64) -> Self {
        self * n as i64
    }
}

impl Coefficient for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn mul_int(&self, n: u64) -> Self {
        self * BigRational::from_integer(BigInt::from(n))
    }
}

impl Coefficient for FieldElement {
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        FieldElement::zero(self.modulus())
    }
    fn one_like(&self) -> Self {
        FieldElement::one(self.modulus())
    }
    fn add_ref(&self, other: &Self) -> Self {
        *self + *other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        *self * *other
    }
    fn neg_ref(&self) -> Self {
        -*self
    }
    fn mul_int(&self, n: u64) -> Self {
        *self * FieldElement::reduce((n % self.modulus()) as i64, self.modulus())
    }
}

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial<C> {
    num_vars: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Coefficient> SparsePolynomial<C> {
    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, terms: BTreeMap::new() }
    }

    /// `coeff * x^exponent`; a zero coefficient yields the zero polynomial.
    pub fn monomial(exponent: Exponent, coeff: C) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_term(exponent, coeff);
        p
    }

    pub fn from_terms<I>(num_vars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, C)>,
    {
        let mut p = Self::zero(num_vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `coeff * x^exponent` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exponent: Exponent, coeff: C) {
        assert_eq!(exponent.len(), self.num_vars, "exponent arity");
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponent) {
            Some(existing) => {
                let sum = existing.add_ref(&coeff);
                if sum.is_zero() {
                    self.terms.remove(&exponent);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exponent, coeff);
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &[u32]) -> Option<&C> {
        self.terms.get(exponent)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Smallest total degree of a term; `None` for the zero polynomial.
    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.num_vars, other.num_vars);
        let mut out = Self::zero(self.num_vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32, one: C) -> Self {
        let mut acc = Self::monomial(vec![0; self.num_vars], one);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_terms(self.num_vars, self.terms.iter().map(|(e, v)| (e.clone(), v.mul_ref(c))))
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> SparsePolynomial<D> {
        SparsePolynomial::from_terms(self.num_vars, self.terms.iter().map(|(e, c)| (e.clone(), f(c))))
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> Result<Self, ArithError> {
        if var >= self.num_vars {
            return Err(ArithError::VariableOutOfRange { index: var, num_vars: self.num_vars });
        }
        let mut out = Self::zero(self.num_vars);
        for (e, c) in &self.terms {
            let n = e[var];
            if n == 0 {
                continue;
            }
            let mut d = e.clone();
            d[var] -= 1;
            out.add_term(d, c.mul_int(n as u64));
        }
        Ok(out)
    }

    /// Substitutes `x_var = 0` and removes the variable.
    pub fn restrict_to_zero(&self, var: usize) -> Result<Self, ArithError> {
        if var >= self.num_vars {
            return Err(ArithError::VariableOutOfRange { index: var, num_vars: self.num_vars });
        }
        let terms = self.terms.iter().filter(|(e, _)| e[var] == 0).map(|(e, c)| {
            let mut r = e.clone();
            r.remove(var);
            (r, c.clone())
        });
        Ok(Self::from_terms(self.num_vars - 1, terms))
    }

    /// Substitutes `x_j -> factors[j] * x_j`.
    pub fn scale_variables(&self, factors: &[C]) -> Result<Self, ArithError> {
        if factors.len() != self.num_vars {
            return Err(ArithError::Arity { expected: self.num_vars, actual: factors.len() });
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut v = c.clone();
            for (f, &n) in factors.iter().zip(e) {
                for _ in 0..n {
                    v = v.mul_ref(f);
                }
            }
            (e.clone(), v)
        });
        Ok(Self::from_terms(self.num_vars, terms))
    }

    /// Exact evaluation by summing terms.
    pub fn eval(&self, point: &[C]) -> Result<C, ArithError> {
        if point.len() != self.num_vars {
            return Err(ArithError::Arity { expected: self.num_vars, actual: point.len() });
        }
        let Some(seed) = point.first().or_else(|| self.terms.values().next()) else {
            return Err(ArithError::Arity { expected: 1, actual: 0 });
        };
        let max_deg = self.terms.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0) as usize;
        // powers[j][n] = point[j]^n
        let powers: Vec<Vec<C>> = point
            .iter()
            .map(|x| {
                let mut row = Vec::with_capacity(max_deg + 1);
                row.push(seed.one_like());
                for n in 1..=max_deg {
                    let next = row[n - 1].mul_ref(x);
                    row.push(next);
                }
                row
            })
            .collect();
        let mut acc = seed.zero_like();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (j, &n) in e.iter().enumerate() {
                t = t.mul_ref(&powers[j][n as usize]);
            }
            acc = acc.add_ref(&t);
        }
        Ok(acc)
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for SparsePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (j, &n) in e.iter().enumerate() {
                match n {
                    0 => {}
                    1 => write!(f, "*z{}", j + 1)?,
                    _ => write!(f, "*z{}^{}", j + 1, n)?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for SparsePolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SparsePolynomial")
            .field("num_vars", &self.num_vars)
            .field("terms", &self.terms)
            .finish()
    }
}
