//! Numerical Riemann–Roch on smooth projective surfaces.
//!
//! Everything here works at the level of Euler characteristics and
//! intersection numbers; individual cohomology dimensions are never computed.

use num_rational::Rational64;
use serde::Serialize;

use crate::error::RrError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    chi: i64,
    k2: i64,
    e: i64,
    q: i64,
    pg: i64,
    b2: i64,
}

impl SurfaceInvariants {
    /// Builds the invariants, deriving `b2 = e - 2 + 4q` and rejecting data
    /// that violates Noether's formula or `chi = 1 - q + p_g`.
    pub fn new(chi: i64, k2: i64, e: i64, q: i64, pg: i64) -> Result<Self, RrError> {
        if 12 * chi != k2 + e {
            return Err(RrError::Noether { chi, k2, e });
        }
        if chi != 1 - q + pg {
            return Err(RrError::Irregularity { chi, q, pg });
        }
        Ok(Self { chi, k2, e, q, pg, b2: e - 2 + 4 * q })
    }

    /// Smooth quintic in `P^3`: `chi = 5`, `K^2 = 5`, `e = 55`, `q = 0`, `p_g = 4`.
    pub fn quintic() -> Self {
        Self::new(5, 5, 55, 0, 4).expect("quintic invariants")
    }

    /// Numerical Godeaux surface: `chi = K^2 = 1`, `p_g = q = 0`.
    pub fn godeaux() -> Self {
        Self::new(1, 1, 11, 0, 0).expect("Godeaux invariants")
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }
    pub fn k2(&self) -> i64 {
        self.k2
    }
    pub fn euler_number(&self) -> i64 {
        self.e
    }
    pub fn irregularity(&self) -> i64 {
        self.q
    }
    pub fn geometric_genus(&self) -> i64 {
        self.pg
    }
    pub fn b2(&self) -> i64 {
        self.b2
    }
}

/// Intersection numbers `(D^2, D.K)` of a divisor class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NumericalDivisor {
    self_int: i64,
    dot_k: i64,
}

impl NumericalDivisor {
    /// Rejects `D^2` and `D.K` of different parity (Wu's formula).
    pub fn new(self_int: i64, dot_k: i64) -> Result<Self, RrError> {
        if (self_int - dot_k).rem_euclid(2) != 0 {
            return Err(RrError::Parity { self_int, dot_k });
        }
        Ok(Self { self_int, dot_k })
    }

    pub fn zero() -> Self {
        Self { self_int: 0, dot_k: 0 }
    }

    pub fn self_int(&self) -> i64 {
        self.self_int
    }

    pub fn dot_k(&self) -> i64 {
        self.dot_k
    }

    /// Numerics of `K - D` given `K^2`.
    pub fn residual(&self, k2: i64) -> Self {
        Self { self_int: k2 - 2 * self.dot_k + self.self_int, dot_k: k2 - self.dot_k }
    }

    /// Numerics of `D + n C`, given the mixed product `D.C`.
    pub fn add_multiple(&self, c: &NumericalDivisor, d_dot_c: i64, n: i64) -> Self {
        Self {
            self_int: self.self_int + 2 * n * d_dot_c + n * n * c.self_int,
            dot_k: self.dot_k + n * c.dot_k,
        }
    }
}

/// `chi(O(D)) = chi(O) + (D^2 - D.K) / 2`.
pub fn chi_divisor(s: &SurfaceInvariants, d: &NumericalDivisor) -> i64 {
    s.chi + (d.self_int - d.dot_k) / 2
}

/// Arithmetic genus `1 + (D^2 + D.K) / 2` of a curve in the class `D`.
pub fn adjunction_genus(d: &NumericalDivisor) -> i64 {
    1 + (d.self_int + d.dot_k) / 2
}

/// Topological Euler number from Noether's formula.
pub fn noether_euler(chi: i64, k2: i64) -> i64 {
    12 * chi - k2
}

/// Invariants of the quotient by a free action of a group of order `degree`.
pub fn quotient_invariants(
    cover: &SurfaceInvariants,
    degree: i64,
    q: i64,
    pg: i64,
) -> Result<SurfaceInvariants, RrError> {
    if degree <= 0 {
        return Err(RrError::BadDegree);
    }
    let divide = |name: &'static str, value: i64| {
        if value % degree == 0 {
            Ok(value / degree)
        } else {
            Err(RrError::NotDivisible { name, value, degree })
        }
    };
    let chi = divide("chi", cover.chi)?;
    let k2 = divide("K^2", cover.k2)?;
    let e = divide("e", cover.e)?;
    SurfaceInvariants::new(chi, k2, e, q, pg)
}

/// Unchecked variant of [`quotient_invariants`] input: raw `(chi, K^2, e)`
/// triples that may not satisfy Noether, used to exercise the divisibility
/// error path.
pub fn divide_triple(chi: i64, k2: i64, e: i64, degree: i64) -> Result<(i64, i64, i64), RrError> {
    if degree <= 0 {
        return Err(RrError::BadDegree);
    }
    for (name, value) in [("chi", chi), ("K^2", k2), ("e", e)] {
        if value % degree != 0 {
            return Err(RrError::NotDivisible { name, value, degree });
        }
    }
    Ok((chi / degree, k2 / degree, e / degree))
}

/// Target Hilbert function of rank-one pre-spectral data: `(nd+1)(nd+2)/2`.
pub fn prespectral_target(n: i64, d: i64) -> i64 {
    (n * d + 1) * (n * d + 2) / 2
}

/// `chi(O(D + (n+1)C))` for `n = 0..=n_max`, where `F = O(D + C)`.
pub fn prespectral_values(
    s: &SurfaceInvariants,
    d: &NumericalDivisor,
    c: &NumericalDivisor,
    d_dot_c: i64,
    n_max: u32,
) -> Vec<i64> {
    (0..=n_max as i64)
        .map(|n| chi_divisor(s, &d.add_multiple(c, d_dot_c, n + 1)))
        .collect()
}

/// Checks `chi(F(nC)) = (n+1)(n+2)/2` for `n = 0..=n_max` with `F = O(D + C)`
/// and `d = 1` (a Cartier curve on a smooth surface).
pub fn prespectral_hilbert_check(
    s: &SurfaceInvariants,
    d: &NumericalDivisor,
    c: &NumericalDivisor,
    d_dot_c: i64,
    n_max: u32,
) -> bool {
    prespectral_values(s, d, c, d_dot_c, n_max)
        .iter()
        .enumerate()
        .all(|(n, &v)| v == prespectral_target(n as i64, 1))
}

/// The excellent-sheaf form of the same condition: `chi(F((n-1)C)) = n(n+1)/2`.
pub fn excellent_chi_check(
    s: &SurfaceInvariants,
    d: &NumericalDivisor,
    c: &NumericalDivisor,
    d_dot_c: i64,
    n_max: u32,
) -> bool {
    (0..=n_max as i64).all(|n| {
        // F((n-1)C) = O(D + nC)
        chi_divisor(s, &d.add_multiple(c, d_dot_c, n)) == n * (n + 1) / 2
    })
}

/// Quadratic fitted to `chi(O(mC))` through `m = 1, 2, 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthFit {
    pub leading: Rational64,
    pub linear: Rational64,
    pub constant: Rational64,
    /// The fit reproduces `chi(O(mC))` for every `m <= m_max`.
    pub exact: bool,
}

pub fn growth_fit(s: &SurfaceInvariants, c: &NumericalDivisor, m_max: u32) -> GrowthFit {
    let f = |m: i64| chi_divisor_unchecked(s, c, m);
    let (f1, f2, f3) = (f(1), f(2), f(3));
    // Newton forward differences at m = 1
    let second = Rational64::from_integer(f3 - 2 * f2 + f1);
    let leading = second / 2;
    let first = Rational64::from_integer(f2 - f1);
    // f(m) = a m^2 + b m + c
    let linear = first - leading * 3;
    let constant = Rational64::from_integer(f1) - leading - linear;
    let exact = (0..=m_max as i64).all(|m| {
        let mm = Rational64::from_integer(m);
        leading * mm * mm + linear * mm + constant == Rational64::from_integer(f(m))
    });
    GrowthFit { leading, linear, constant, exact }
}

/// `chi(O(mC))` computed directly as a rational, which is exact even when
/// the parity of `C` would make a single `chi` non-integral.
fn chi_divisor_unchecked(s: &SurfaceInvariants, c: &NumericalDivisor, m: i64) -> i64 {
    let md = NumericalDivisor { self_int: m * m * c.self_int, dot_k: m * c.dot_k };
    chi_divisor(s, &md)
}

/// `dim B_m ~ m^2 / 2`: the leading coefficient of `chi(O(mC))` is `C^2/2`
/// and must equal 1/2.
pub fn growth_check(s: &SurfaceInvariants, c: &NumericalDivisor, m_max: u32) -> bool {
    let fit = growth_fit(s, c, m_max);
    fit.exact && fit.leading == Rational64::new(1, 2)
}

/// `chi` of a degree-`degree` line bundle on a genus-`genus` curve.
pub fn chi_curve_sheaf(degree: i64, genus: i64) -> Result<i64, RrError> {
    if degree < 0 {
        return Err(RrError::NegativeDegree(degree));
    }
    Ok(degree - genus + 1)
}

/// `h^0` of a line bundle of degree `> 2g - 2` (where `h^1` vanishes).
pub fn h0_nonspecial(degree: i64, genus: i64) -> Option<i64> {
    (degree > 2 * genus - 2).then(|| degree - genus + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nd(a: i64, b: i64) -> NumericalDivisor {
        NumericalDivisor::new(a, b).unwrap()
    }

    #[test]
    fn chi_examples() {
        let s = SurfaceInvariants::godeaux();
        assert_eq!(chi_divisor(&s, &nd(-1, 1)), 0);
        assert_eq!(chi_divisor(&s, &NumericalDivisor::zero()), 1);
        assert_eq!(chi_divisor(&s, &nd(1, 1)), 1);
        assert!(NumericalDivisor::new(-1, 0).is_err());
    }

    #[test]
    fn genus_examples() {
        assert_eq!(adjunction_genus(&nd(1, 1)), 2);
        assert_eq!(adjunction_genus(&nd(1, -3)), 0);
        // hyperplane section of a quintic: smooth plane quintic of genus 6
        assert_eq!(adjunction_genus(&nd(5, 5)), 6);
        assert_eq!((5 - 1) * (5 - 2) / 2, 6);
        // the 5:1 etale cover of a genus-2 curve has genus 6
        assert_eq!(2 - 2 * 6, 5 * (2 - 2 * 2));
    }

    #[test]
    fn noether_examples() {
        assert_eq!(noether_euler(1, 1), 11);
        assert_eq!(noether_euler(5, 5), 55);
        assert_eq!(noether_euler(1, 9), 3);
        assert!(SurfaceInvariants::new(1, 1, 10, 0, 0).is_err());
        assert!(SurfaceInvariants::new(1, 1, 11, 0, 1).is_err());
    }

    #[test]
    fn quotient_examples() {
        let x = quotient_invariants(&SurfaceInvariants::quintic(), 5, 0, 0).unwrap();
        assert_eq!(x, SurfaceInvariants::godeaux());
        assert_eq!((x.chi(), x.k2(), x.euler_number(), x.b2()), (1, 1, 11, 9));
        let same = quotient_invariants(&SurfaceInvariants::quintic(), 1, 0, 4).unwrap();
        assert_eq!(same, SurfaceInvariants::quintic());
        assert_eq!(
            divide_triple(5, 5, 54, 5),
            Err(RrError::NotDivisible { name: "e", value: 54, degree: 5 })
        );
        assert!(quotient_invariants(&SurfaceInvariants::quintic(), 0, 0, 0).is_err());
    }

    #[test]
    fn prespectral_examples() {
        let s = SurfaceInvariants::godeaux();
        let d = nd(-1, 1);
        let c = nd(1, 1);
        let vals = prespectral_values(&s, &d, &c, 1, 10);
        assert_eq!(vals[0], 1);
        assert_eq!(vals[1], 3);
        assert_eq!(vals[2], 6);
        assert_eq!(vals[10], 66);
        assert!(prespectral_hilbert_check(&s, &d, &c, 1, 10));
        assert!(excellent_chi_check(&s, &d, &c, 1, 10));
        // C with C.K = -C^2 cannot be ample on a surface of general type
        assert!(!prespectral_hilbert_check(&s, &d, &nd(1, -1), 1, 10));
    }

    #[test]
    fn growth_examples() {
        let s = SurfaceInvariants::godeaux();
        let fit = growth_fit(&s, &nd(1, 1), 20);
        assert_eq!(fit.leading, Rational64::new(1, 2));
        assert!(fit.exact);
        assert!(growth_check(&s, &nd(1, 1), 20));
        let fit2 = growth_fit(&s, &nd(2, 0), 20);
        assert_eq!(fit2.leading, Rational64::from_integer(1));
        assert!(!growth_check(&s, &nd(2, 0), 20));
    }

    #[test]
    fn curve_examples() {
        assert_eq!(chi_curve_sheaf(2, 2), Ok(1));
        assert_eq!(chi_curve_sheaf(0, 0), Ok(1));
        assert!(chi_curve_sheaf(-1, 0).is_err());
        for n in 3..10 {
            assert_eq!(h0_nonspecial(n, 2), Some(n - 1));
        }
        assert_eq!(h0_nonspecial(2, 2), None);
    }

    proptest! {
        #[test]
        fn serre_duality_symmetry(a in -50i64..50, b in -50i64..50) {
            let b = if (a - b) % 2 == 0 { b } else { b + 1 };
            let s = SurfaceInvariants::godeaux();
            let d = nd(a, b);
            prop_assert_eq!(chi_divisor(&s, &d), chi_divisor(&s, &d.residual(s.k2())));
        }

        #[test]
        fn parity_is_enforced(a in -50i64..50, b in -50i64..50) {
            prop_assert_eq!(NumericalDivisor::new(a, b).is_ok(), (a - b) % 2 == 0);
        }
    }
}
