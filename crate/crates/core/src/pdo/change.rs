//! Linear changes of variables
//! `d2 -> a d2 + c d1 + b`, `d1 -> e d1 + d`, `x1 -> x1/e - c/(ae) x2`, `x2 -> x2/a`.
//!
//! The position images are forced by the derivative images: they are the
//! unique linear forms keeping `[d_i, x_j] = delta_ij`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::operator::{OpKey, TruncatedOperator};
use crate::arith::SparsePolynomial;
use crate::error::PdoError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    a: BigRational,
    b: BigRational,
    c: BigRational,
    d: BigRational,
    e: BigRational,
}

type Poly = SparsePolynomial<BigRational>;

fn linear(c1: BigRational, c2: BigRational, c0: BigRational) -> Poly {
    Poly::from_terms(2, [(vec![1, 0], c1), (vec![0, 1], c2), (vec![0, 0], c0)])
}

fn powers(base: &Poly, n: u32) -> Vec<Poly> {
    let mut out = vec![Poly::monomial(vec![0, 0], BigRational::one())];
    for j in 1..=n as usize {
        let next = out[j - 1].mul(base);
        out.push(next);
    }
    out
}

impl LinearChange {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational, e: BigRational) -> Result<Self, PdoError> {
        if a.is_zero() || e.is_zero() {
            return Err(PdoError::SingularChange);
        }
        Ok(Self { a, b, c, d, e })
    }

    pub fn identity() -> Self {
        Self::special(BigRational::zero(), BigRational::zero(), BigRational::zero())
    }

    /// `a = e = 1`: `d2 -> d2 + c d1 + b`, `d1 -> d1 + d`, `x1 -> x1 - c x2`.
    pub fn special(b: BigRational, c: BigRational, d: BigRational) -> Self {
        Self { a: BigRational::one(), b, c, d, e: BigRational::one() }
    }

    pub fn params(&self) -> [&BigRational; 5] {
        [&self.a, &self.b, &self.c, &self.d, &self.e]
    }

    pub fn inverse(&self) -> Self {
        let (a, b, c, d, e) = (&self.a, &self.b, &self.c, &self.d, &self.e);
        Self {
            a: a.recip(),
            b: (c * d / e - b) / a,
            c: -c / (a * e),
            d: -d / e,
            e: e.recip(),
        }
    }

    /// Images of `x1, x2` as linear forms in `x1, x2`.
    fn position_images(&self) -> [Poly; 2] {
        let z = BigRational::zero();
        [
            linear(self.e.recip(), -&self.c / (&self.a * &self.e), z.clone()),
            linear(z.clone(), self.a.recip(), z),
        ]
    }

    /// Images of `d1, d2` as affine forms in the commuting `d1, d2`.
    fn derivative_images(&self) -> [Poly; 2] {
        [
            linear(self.e.clone(), BigRational::zero(), self.d.clone()),
            linear(self.c.clone(), self.a.clone(), self.b.clone()),
        ]
    }

    /// Substitutes generator-wise. A product of a position polynomial and
    /// a constant-coefficient derivative polynomial is already in normal
    /// form, and x-degrees are preserved, so the budget carries over.
    pub fn apply(&self, p: &TruncatedOperator) -> TruncatedOperator {
        let maxdeg = |idx: usize| p.terms().keys().map(|k| k[idx]).max().unwrap_or(0);
        let [x1, x2] = self.position_images();
        let [d1, d2] = self.derivative_images();
        let (px1, px2, pd1, pd2) = (powers(&x1, maxdeg(0)), powers(&x2, maxdeg(1)), powers(&d1, maxdeg(2)), powers(&d2, maxdeg(3)));
        let mut terms: Vec<(OpKey, BigRational)> = Vec::new();
        for (key, alpha) in p.terms() {
            let xs = px1[key[0] as usize].mul(&px2[key[1] as usize]);
            let ds = pd1[key[2] as usize].mul(&pd2[key[3] as usize]);
            for (xe, xc) in xs.terms() {
                for (de, dc) in ds.terms() {
                    terms.push(([xe[0], xe[1], de[0], de[1]], alpha * xc * dc));
                }
            }
        }
        TruncatedOperator::from_terms(terms, p.precision(), p.d_bound())
            .expect("substitution never raises the derivative degree")
    }
}
