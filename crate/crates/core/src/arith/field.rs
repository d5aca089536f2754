//! Prime fields `F_q` with elements that carry their modulus.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::ArithError;

/// Deterministic trial-division primality test; moduli here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of `F_q`, always stored reduced into `[0, q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldElement {
    value: u64,
    modulus: u64,
}

impl FieldElement {
    /// Reduces `value` modulo the prime `q`.
    pub fn new(value: i64, q: u64) -> Result<Self, ArithError> {
        if !is_prime(q) {
            return Err(ArithError::NotPrime(q));
        }
        Ok(Self::reduce(value, q))
    }

    /// Like [`FieldElement::new`] but skips the primality test. Callers must
    /// already hold a prime modulus (for instance one taken from another element).
    pub(crate) fn reduce(value: i64, q: u64) -> Self {
        let value = value.rem_euclid(q as i64) as u64;
        Self { value, modulus: q }
    }

    pub fn zero(q: u64) -> Self {
        Self { value: 0, modulus: q }
    }

    pub fn one(q: u64) -> Self {
        Self { value: 1 % q, modulus: q }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    pub fn pow(self, mut exp: u64) -> Self {
        let q = self.modulus as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128 % q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            exp >>= 1;
        }
        Self { value: acc as u64, modulus: self.modulus }
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inverse(self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.pow(self.modulus - 2))
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "field elements from different fields F_{} and F_{}",
            self.modulus, other.modulus
        );
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check_same_field(&rhs);
        let s = self.value + rhs.value;
        let value = if s >= self.modulus { s - self.modulus } else { s };
        Self { value, modulus: self.modulus }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        let value = if self.value == 0 { 0 } else { self.modulus - self.value };
        Self { value, modulus: self.modulus }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check_same_field(&rhs);
        let value = ((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64;
        Self { value, modulus: self.modulus }
    }
}

/// Smallest `g` in `F_q` with `g^5 = 1` and `g != 1`.
///
/// Such an element exists exactly when `5 | q - 1`.
pub fn primitive_fifth_root(q: u64) -> Result<FieldElement, ArithError> {
    if !is_prime(q) {
        return Err(ArithError::NotPrime(q));
    }
    if q % 5 != 1 {
        return Err(ArithError::NoFifthRoot(q));
    }
    (2..q)
        .map(|g| FieldElement::reduce(g as i64, q))
        .find(|g| g.pow(5).is_one())
        .ok_or(ArithError::NoFifthRoot(q))
}

/// Primes used when no explicit list is configured.
pub const DEFAULT_PRIMES: [u64; 6] = [11, 31, 41, 61, 71, 101];
