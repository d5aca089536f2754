//! The Picard group `Z K + (-E8) + Z/5` of a numerical Godeaux surface with
//! torsion `Z/5`, and the enumeration of the divisor classes `K + E + t`.
//!
//! Lattice vectors are stored in doubled coordinates so that half-integer
//! points of E8 stay integral.

use std::collections::{BTreeMap, HashSet};
use std::ops::{Add, Neg, Sub};

use serde::Serialize;

use crate::arith::linalg::{determinant, is_positive_definite, leading_principal_minors, rank};
use crate::error::LatticeError;
use crate::report::{CheckEntry, Provenance, ReportFragment};
use crate::rr::{adjunction_genus, chi_divisor, NumericalDivisor, SurfaceInvariants};

/// Order of the torsion subgroup.
pub const TORSION_ORDER: u8 = 5;

/// A point of E8 in doubled coordinates: true coordinates are `c / 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct E8Vector([i64; 8]);

impl E8Vector {
    /// Accepts all-even or all-odd doubled coordinates with sum divisible by 4.
    pub fn new(c: [i64; 8]) -> Result<Self, LatticeError> {
        let parity = c[0].rem_euclid(2);
        let uniform = c.iter().all(|v| v.rem_euclid(2) == parity);
        let sum: i64 = c.iter().sum();
        if uniform && sum.rem_euclid(4) == 0 {
            Ok(Self(c))
        } else {
            Err(LatticeError::NotInLattice(c))
        }
    }

    pub const fn zero() -> Self {
        Self([0; 8])
    }

    pub fn coords(&self) -> [i64; 8] {
        self.0
    }

    /// Euclidean dot product of true coordinates (positive definite).
    pub fn euclidean_dot(&self, other: &Self) -> i64 {
        let raw: i64 = self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum();
        debug_assert_eq!(raw % 4, 0);
        raw / 4
    }

    /// Intersection number under the negative definite form.
    pub fn pairing(&self, other: &Self) -> i64 {
        -self.euclidean_dot(other)
    }

    pub fn norm(&self) -> i64 {
        self.pairing(self)
    }

    pub fn is_root(&self) -> bool {
        self.norm() == -2
    }

    /// The representative of `{e, -e}` that is lexicographically larger.
    pub fn sign_class(&self) -> Self {
        (*self).max(-*self)
    }

    pub fn scale(&self, n: i64) -> Self {
        Self(self.0.map(|v| v * n))
    }
}

impl Add for E8Vector {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut c = self.0;
        for (a, b) in c.iter_mut().zip(rhs.0) {
            *a += b;
        }
        Self(c)
    }
}

impl Sub for E8Vector {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for E8Vector {
    type Output = Self;
    fn neg(self) -> Self {
        Self(self.0.map(|v| -v))
    }
}

/// All 240 roots: 112 of shape `(+-1, +-1, 0^6)` and 128 of shape
/// `(+-1/2)^8` with an even number of minus signs.
pub fn e8_roots() -> Vec<E8Vector> {
    let mut out = Vec::with_capacity(240);
    for i in 0..8 {
        for j in i + 1..8 {
            for si in [2, -2] {
                for sj in [2, -2] {
                    let mut c = [0; 8];
                    c[i] = si;
                    c[j] = sj;
                    out.push(E8Vector(c));
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            let c = std::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 });
            out.push(E8Vector(c));
        }
    }
    out
}

/// A simple-root basis of E8 (Bourbaki numbering).
pub fn simple_roots() -> [E8Vector; 8] {
    let unit = |i: usize| {
        let mut c = [0; 8];
        c[i] = 2;
        E8Vector(c)
    };
    let mut roots = [E8Vector::zero(); 8];
    roots[0] = E8Vector([1, -1, -1, -1, -1, -1, -1, 1]);
    roots[1] = unit(0) + unit(1);
    for j in 2..8 {
        roots[j] = unit(j - 1) - unit(j - 2);
    }
    roots
}

/// Gram matrix of the simple roots under the negative definite pairing.
pub fn gram_matrix() -> Vec<Vec<i64>> {
    let b = simple_roots();
    b.iter().map(|x| b.iter().map(|y| x.pairing(y)).collect()).collect()
}

/// `k K + e + t` with `K^2 = 1`, `K . e = 0`, and torsion `t` in `Z/5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PicardClass {
    pub k: i64,
    pub e: E8Vector,
    pub t: u8,
}

impl PicardClass {
    pub fn new(k: i64, e: E8Vector, t: i64) -> Self {
        Self { k, e, t: t.rem_euclid(TORSION_ORDER as i64) as u8 }
    }

    pub fn canonical() -> Self {
        Self::new(1, E8Vector::zero(), 0)
    }

    pub fn from_root(e: E8Vector, t: i64) -> Self {
        Self::new(0, e, t)
    }

    pub fn torsion(t: i64) -> Self {
        Self::new(0, E8Vector::zero(), t)
    }

    pub fn intersect(&self, other: &Self) -> i64 {
        self.k * other.k + self.e.pairing(&other.e)
    }

    pub fn self_intersection(&self) -> i64 {
        self.intersect(self)
    }

    pub fn dot_canonical(&self) -> i64 {
        self.k
    }

    pub fn numerical(&self) -> NumericalDivisor {
        NumericalDivisor::new(self.self_intersection(), self.dot_canonical())
            .expect("E8 is even, so D^2 and D.K share parity")
    }

    pub fn scale(&self, n: i64) -> Self {
        Self::new(self.k * n, self.e.scale(n), self.t as i64 * n)
    }
}

impl Add for PicardClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.k + rhs.k, self.e + rhs.e, self.t as i64 + rhs.t as i64)
    }
}

impl Sub for PicardClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PicardClass {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.k, -self.e, -(self.t as i64))
    }
}

/// Curves `C_j = K + j*alpha`, `j = 1..4`: numerically `K`, pairwise
/// distinct in `Pic`.
pub fn curve_classes() -> [PicardClass; 4] {
    std::array::from_fn(|j| PicardClass::canonical() + PicardClass::torsion(j as i64 + 1))
}

/// The 1200 classes `E + t` with `E` a root: `E^2 = -2`, `E.K = 0`.
pub fn exceptional_candidates() -> Vec<PicardClass> {
    let roots = e8_roots();
    let mut out = Vec::with_capacity(roots.len() * TORSION_ORDER as usize);
    for e in roots {
        for t in 0..TORSION_ORDER as i64 {
            out.push(PicardClass::from_root(e, t));
        }
    }
    out
}

/// The 1200 classes `D = K + E + t`.
pub fn divisor_candidates() -> Vec<PicardClass> {
    exceptional_candidates().into_iter().map(|e| PicardClass::canonical() + e).collect()
}

/// Ten classes `{K +- E + t : t in Z/5}` for a fixed root pair `+-E`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClassOrbit {
    root: E8Vector,
    members: Vec<PicardClass>,
}

impl DivisorClassOrbit {
    /// The representative root of `+-E` (the lexicographically larger one).
    pub fn root(&self) -> E8Vector {
        self.root
    }

    pub fn members(&self) -> &[PicardClass] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, d: &PicardClass) -> bool {
        self.members.binary_search(d).is_ok()
    }
}

/// Groups the candidates by `+-E`.
pub fn partition_orbits() -> Result<Vec<DivisorClassOrbit>, LatticeError> {
    partition_classes(&divisor_candidates())
}

pub fn partition_classes(classes: &[PicardClass]) -> Result<Vec<DivisorClassOrbit>, LatticeError> {
    let mut groups: BTreeMap<E8Vector, Vec<PicardClass>> = BTreeMap::new();
    for d in classes {
        groups.entry(d.e.sign_class()).or_default().push(*d);
    }
    groups
        .into_iter()
        .map(|(root, mut members)| {
            members.sort_unstable();
            members.dedup();
            if members.len() != 2 * TORSION_ORDER as usize {
                return Err(LatticeError::OrbitSize { size: members.len() });
            }
            Ok(DivisorClassOrbit { root, members })
        })
        .collect()
}

/// At most one bad element per orbit.
pub const BAD_PER_ORBIT: usize = 1;
/// At most two members per orbit with `h^0(K + D + t) = 2`, one per sign of `E`.
pub const DEGENERATE_PER_ORBIT: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCounts {
    pub candidates: usize,
    pub good_lower_bound: usize,
    pub excellent_lower_bound: usize,
}

/// Lower bounds from removing the excluded members of each orbit.
pub fn theorem_counts(orbits: &[DivisorClassOrbit]) -> TheoremCounts {
    let candidates: usize = orbits.iter().map(DivisorClassOrbit::len).sum();
    let good: usize = orbits.iter().map(|o| o.len().saturating_sub(BAD_PER_ORBIT)).sum();
    let excellent: usize =
        orbits.iter().map(|o| o.len().saturating_sub(BAD_PER_ORBIT + DEGENERATE_PER_ORBIT)).sum();
    TheoremCounts { candidates, good_lower_bound: good, excellent_lower_bound: excellent }
}

/// Numerical conditions on a pair `(D, C)` of candidate divisor and curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorConditions {
    pub exceptional_norm: i64,
    pub curve_self_int: i64,
    pub curve_dot_k: i64,
    pub curve_genus: i64,
    pub d_dot_c: i64,
    pub chi_d: i64,
}

impl DivisorConditions {
    pub fn holds(&self) -> bool {
        self.exceptional_norm == -2
            && self.curve_self_int == 1
            && self.curve_dot_k == 1
            && self.curve_genus == 2
            && self.d_dot_c == self.curve_genus - 1
            && self.chi_d == 0
    }
}

pub fn check_divisor_conditions(d: &PicardClass, c: &PicardClass) -> DivisorConditions {
    let s = SurfaceInvariants::godeaux();
    let e = *d - PicardClass::canonical().scale(d.k);
    let cn = c.numerical();
    DivisorConditions {
        exceptional_norm: e.self_intersection(),
        curve_self_int: cn.self_int(),
        curve_dot_k: cn.dot_k(),
        curve_genus: adjunction_genus(&cn),
        d_dot_c: d.intersect(c),
        chi_d: chi_divisor(&s, &d.numerical()),
    }
}

pub fn verify_divisor_conditions(d: &PicardClass, c: &PicardClass) -> ReportFragment {
    let r = check_divisor_conditions(d, c);
    let anchor = "divisor and curve conditions";
    vec![
        CheckEntry::equal("divisor.e_norm", anchor, Provenance::Published, -2, r.exceptional_norm),
        CheckEntry::equal("divisor.c_squared", anchor, Provenance::Published, 1, r.curve_self_int),
        CheckEntry::equal("divisor.c_dot_k", anchor, Provenance::Published, 1, r.curve_dot_k),
        CheckEntry::equal("divisor.c_genus", anchor, Provenance::Published, 2, r.curve_genus),
        CheckEntry::equal("divisor.d_dot_c", anchor, Provenance::Published, r.curve_genus - 1, r.d_dot_c),
        CheckEntry::equal("divisor.chi_d", anchor, Provenance::Published, 0, r.chi_d),
    ]
}

/// Unimodularity, evenness and definiteness of E8, with the root count.
pub fn lattice_checks() -> ReportFragment {
    let roots = e8_roots();
    let gram = gram_matrix();
    let positive: Vec<Vec<i64>> = gram.iter().map(|r| r.iter().map(|v| -v).collect()).collect();
    let integral = {
        let b = simple_roots();
        b.iter().all(|x| {
            b.iter().all(|y| x.0.iter().zip(&y.0).map(|(a, c)| a * c).sum::<i64>() % 4 == 0)
        })
    };
    let even_diagonal = gram.iter().enumerate().all(|(i, r)| r[i] % 2 == 0);
    let distinct: HashSet<_> = roots.iter().collect();
    let closed = roots.iter().all(|r| distinct.contains(&-*r));
    let minors = leading_principal_minors(&positive);
    let anchor = "even negative definite unimodular lattice of rank 8";
    let rows: Vec<Vec<i64>> = simple_roots().iter().map(|r| r.coords().to_vec()).collect();
    vec![
        CheckEntry::equal("lattice.root_count", "240 roots of self-intersection -2", Provenance::Published, 240, distinct.len()),
        CheckEntry::holds("lattice.root_norms", "240 roots of self-intersection -2", Provenance::Trivial, roots.iter().all(E8Vector::is_root)),
        CheckEntry::holds("lattice.root_negation", anchor, Provenance::Trivial, closed),
        CheckEntry::equal("lattice.gram_determinant", anchor, Provenance::Derived, 1.to_string(), determinant(&gram).magnitude().to_string()),
        CheckEntry::holds("lattice.integral_even", anchor, Provenance::Derived, integral && even_diagonal),
        CheckEntry::new(
            "lattice.negative_definite",
            anchor,
            Provenance::Derived,
            "all minors > 0",
            minors.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","),
            if is_positive_definite(&positive) { crate::report::Status::Pass } else { crate::report::Status::Fail },
        ),
        CheckEntry::equal("lattice.rank", anchor, Provenance::Published, 8, rank(&rows)),
        CheckEntry::equal("lattice.picard_rank", "second Betti number 9", Provenance::Published, SurfaceInvariants::godeaux().b2(), 1 + rank(&rows) as i64),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// All doubled vectors in `[-2, 2]^8` that lie in E8 and have Euclidean
    /// norm 2.
    fn brute_force_roots() -> Vec<E8Vector> {
        let mut out = vec![];
        for code in 0..5i64.pow(8) {
            let mut c = [0i64; 8];
            let mut x = code;
            for v in c.iter_mut() {
                *v = x % 5 - 2;
                x /= 5;
            }
            if c.iter().map(|v| v * v).sum::<i64>() == 8 {
                if let Ok(e) = E8Vector::new(c) {
                    out.push(e);
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn roots_match_exhaustive_search() {
        let mut roots = e8_roots();
        roots.sort();
        assert_eq!(roots, brute_force_roots());
        assert_eq!(roots.len(), 240);
        let shape2 = roots.iter().filter(|r| r.coords().iter().any(|&v| v == 0)).count();
        assert_eq!(shape2, 112);
    }

    #[test]
    fn root_examples() {
        assert_eq!(E8Vector::new([2, 2, 0, 0, 0, 0, 0, 0]).unwrap().norm(), -2);
        assert_eq!(E8Vector::new([1; 8]).unwrap().norm(), -2);
        assert!(E8Vector::new([1, 1, 1, 1, 1, 1, 1, -1]).is_err());
        assert!(E8Vector::new([2, 1, 1, 1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn simple_roots_are_roots_with_unit_gram() {
        assert!(simple_roots().iter().all(|r| r.is_root()));
        assert_eq!(determinant(&gram_matrix()), 1.into());
        assert!(lattice_checks().iter().all(|e| e.passed()), "{:?}", lattice_checks());
    }

    #[test]
    fn candidate_numerics() {
        let ds = divisor_candidates();
        assert_eq!(ds.len(), 1200);
        assert_eq!(ds.iter().collect::<HashSet<_>>().len(), 1200);
        for d in &ds {
            assert_eq!(d.self_intersection(), -1);
            assert_eq!(d.dot_canonical(), 1);
            let k = PicardClass::canonical();
            assert_eq!(d.intersect(&(*d - k)), -2);
        }
    }

    #[test]
    fn orbits_partition_candidates() {
        let orbits = partition_orbits().unwrap();
        assert_eq!(orbits.len(), 120);
        let mut seen = HashSet::new();
        for o in &orbits {
            assert_eq!(o.len(), 10);
            for m in o.members() {
                assert!(seen.insert(*m));
                let flipped = PicardClass::new(m.k, -m.e, m.t as i64);
                assert!(o.contains(&flipped));
                assert!(o.contains(&(*m + PicardClass::torsion(1))));
            }
        }
        assert_eq!(seen, divisor_candidates().into_iter().collect());
        let bad = partition_classes(&divisor_candidates()[..7]);
        assert!(matches!(bad, Err(LatticeError::OrbitSize { .. })));
    }

    #[test]
    fn counts() {
        let c = theorem_counts(&partition_orbits().unwrap());
        assert_eq!((c.candidates, c.good_lower_bound, c.excellent_lower_bound), (1200, 1080, 840));
        assert_eq!(120 * 9, 1080);
        assert_eq!(120 * 7, 840);
    }

    #[test]
    fn divisor_conditions() {
        let k = PicardClass::canonical();
        let d = k + PicardClass::from_root(e8_roots()[17], 2);
        assert!(check_divisor_conditions(&d, &k).holds());
        assert!(verify_divisor_conditions(&d, &k).iter().all(|e| e.passed()));
        let bad = check_divisor_conditions(&k, &k);
        assert_eq!(bad.exceptional_norm, 0);
        assert!(!bad.holds());
        for d in divisor_candidates() {
            for c in curve_classes() {
                assert!(check_divisor_conditions(&d, &c).holds());
            }
        }
    }

    #[test]
    fn curves_are_distinct_but_numerically_canonical() {
        let cs = curve_classes();
        assert_eq!(cs.iter().collect::<HashSet<_>>().len(), 4);
        for c in cs {
            assert_eq!(c.numerical(), PicardClass::canonical().numerical());
            assert_ne!(c, PicardClass::canonical());
        }
    }

    fn class() -> impl Strategy<Value = PicardClass> {
        (-5i64..5, prop::sample::select(e8_roots()), -3i64..3, 0i64..5)
            .prop_map(|(k, e, n, t)| PicardClass::new(k, e.scale(n), t))
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_bilinear(a in class(), b in class(), c in class(), n in -4i64..4) {
            prop_assert_eq!(a.intersect(&b), b.intersect(&a));
            prop_assert_eq!((a + b).intersect(&c), a.intersect(&c) + b.intersect(&c));
            prop_assert_eq!(a.scale(n).intersect(&b), n * a.intersect(&b));
        }

        #[test]
        fn torsion_is_invisible(a in class(), b in class(), t in 0i64..5) {
            prop_assert_eq!((a + PicardClass::torsion(t)).intersect(&b), a.intersect(&b));
        }
    }
}
