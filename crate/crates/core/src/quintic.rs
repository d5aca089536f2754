//! The family of quintic surfaces in `P^3` invariant under the diagonal
//! `Z/5` action `z_j -> eps^j z_j`, and finite-field checks on its members.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::linalg::rank;
use crate::arith::{primitive_fifth_root, FieldElement, ProjectivePoint, SparsePolynomial};
use crate::error::QuinticError;

pub const NUM_MONOMIALS: usize = 12;

/// Exponent vector of a monomial in `z1..z4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MonomialExponent(pub [u8; 4]);

impl MonomialExponent {
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&n| n as u32).sum()
    }

    /// `sum_j j * n_j` modulo 5: the character by which the generator acts.
    pub fn weight(&self) -> u32 {
        self.0.iter().enumerate().map(|(j, &n)| (j as u32 + 1) * n as u32).sum::<u32>() % 5
    }

    /// Degree 5 and invariant under the generator.
    pub fn is_admissible(&self) -> bool {
        self.degree() == 5 && self.weight() == 0
    }

    pub fn exponent(&self) -> Vec<u32> {
        self.0.iter().map(|&n| n as u32).collect()
    }
}

/// The invariant quintic monomials in their conventional order; the
/// coefficient vector `a1..a12` is indexed by this list.
pub const CANONICAL_MONOMIALS: [[u8; 4]; NUM_MONOMIALS] = [
    [5, 0, 0, 0],
    [3, 0, 1, 1],
    [2, 1, 2, 0],
    [2, 2, 0, 1],
    [1, 3, 1, 0],
    [1, 1, 0, 3],
    [1, 0, 2, 2],
    [0, 5, 0, 0],
    [0, 0, 5, 0],
    [0, 0, 0, 5],
    [0, 2, 1, 2],
    [0, 1, 3, 1],
];

/// Positions of `z1^5, z2^5, z3^5, z4^5` in [`CANONICAL_MONOMIALS`].
pub const PURE_POWER_INDICES: [usize; 4] = [0, 7, 8, 9];

/// All compositions of 5 into four non-negative parts.
pub fn compositions_of_five() -> Vec<MonomialExponent> {
    let mut out = Vec::with_capacity(56);
    for a in 0..=5u8 {
        for b in 0..=5 - a {
            for c in 0..=5 - a - b {
                out.push(MonomialExponent([a, b, c, 5 - a - b - c]));
            }
        }
    }
    out
}

/// The admissible exponents found by exhaustive search, listed in the
/// conventional order.
pub fn enumerate_monomials() -> Vec<MonomialExponent> {
    let mut found: Vec<MonomialExponent> =
        compositions_of_five().into_iter().filter(MonomialExponent::is_admissible).collect();
    let position = |m: &MonomialExponent| {
        CANONICAL_MONOMIALS.iter().position(|c| *c == m.0).unwrap_or(NUM_MONOMIALS)
    };
    found.sort_by_key(|m| (position(m), *m));
    found
}

/// Integer coefficients `a1..a12`, reduced modulo each prime on use.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuinticCoefficients([i64; NUM_MONOMIALS]);

impl QuinticCoefficients {
    pub fn new(a: &[i64]) -> Result<Self, QuinticError> {
        let arr: [i64; NUM_MONOMIALS] =
            a.try_into().map_err(|_| QuinticError::CoefficientCount(a.len()))?;
        Ok(Self(arr))
    }

    /// `z1^5 + z2^5 + z3^5 + z4^5`.
    pub fn fermat() -> Self {
        let mut a = [0; NUM_MONOMIALS];
        for i in PURE_POWER_INDICES {
            a[i] = 1;
        }
        Self(a)
    }

    pub fn values(&self) -> &[i64; NUM_MONOMIALS] {
        &self.0
    }

    pub fn reduce(&self, q: u64) -> Result<[FieldElement; NUM_MONOMIALS], QuinticError> {
        let mut out = [FieldElement::zero(q); NUM_MONOMIALS];
        for (o, &a) in out.iter_mut().zip(&self.0) {
            *o = FieldElement::new(a, q)?;
        }
        if out.iter().all(FieldElement::is_zero) {
            return Err(QuinticError::ZeroCoefficients(q));
        }
        Ok(out)
    }
}

/// `sum a_i z^{n_i}` over `F_q`; requires `q = 1 (mod 5)`.
pub fn build_quintic(
    a: &QuinticCoefficients,
    q: u64,
) -> Result<SparsePolynomial<FieldElement>, QuinticError> {
    primitive_fifth_root(q)?;
    let coeffs = a.reduce(q)?;
    let terms = enumerate_monomials().into_iter().zip(coeffs).map(|(m, c)| (m.exponent(), c));
    Ok(SparsePolynomial::from_terms(4, terms))
}

/// Acts by `z_j -> eps^{w_j} z_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    weights: [u8; 4],
}

impl GroupElement {
    pub fn new(weights: [u8; 4]) -> Self {
        Self { weights: weights.map(|w| w % 5) }
    }

    pub fn generator() -> Self {
        Self::new([1, 2, 3, 4])
    }

    pub fn weights(&self) -> [u8; 4] {
        self.weights
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::new(self.weights.map(|w| ((w as u32 * n) % 5) as u8))
    }

    pub fn is_identity(&self) -> bool {
        self.weights.iter().all(|&w| w == self.weights[0])
    }

    pub fn has_distinct_weights(&self) -> bool {
        (0..4).all(|i| (i + 1..4).all(|j| self.weights[i] != self.weights[j]))
    }

    fn factors(&self, q: u64) -> Result<Vec<FieldElement>, QuinticError> {
        let eps = primitive_fifth_root(q)?;
        Ok(self.weights.iter().map(|&w| eps.pow(w as u64)).collect())
    }
}

/// True iff substituting `g` multiplies the polynomial by a single scalar.
pub fn invariance_check(
    a: &QuinticCoefficients,
    g: &GroupElement,
    q: u64,
) -> Result<bool, QuinticError> {
    let f = build_quintic(a, q)?;
    let moved = f.scale_variables(&g.factors(q)?)?;
    let mut ratio = None;
    for (e, c) in f.terms() {
        let Some(m) = moved.coefficient(e) else {
            return Ok(false);
        };
        let r = *m * c.inverse()?;
        match ratio {
            None => ratio = Some(r),
            Some(prev) if prev != r => return Ok(false),
            _ => {}
        }
    }
    Ok(moved.num_terms() == f.num_terms())
}

/// Fixed points of `g` on `P^3(F_q)`: points whose nonzero coordinates
/// all lie in a single eigenspace. With distinct weights these are the
/// coordinate points.
pub fn fixed_points(g: &GroupElement, q: u64) -> Result<Vec<ProjectivePoint>, QuinticError> {
    primitive_fifth_root(q)?;
    if !g.has_distinct_weights() {
        return Err(QuinticError::RepeatedWeights(g.weights()));
    }
    Ok((0..4).map(|j| ProjectivePoint::coordinate(j, 3, q)).collect())
}

/// Both free-action routes: `(by_evaluation, by_coefficients)`.
pub fn free_action_routes(a: &QuinticCoefficients, q: u64) -> Result<(bool, bool), QuinticError> {
    let f = build_quintic(a, q)?;
    let g = GroupElement::generator();
    let mut by_evaluation = true;
    // every nontrivial element of the group has the same fixed points
    for n in 1..5 {
        for p in fixed_points(&g.pow(n), q)? {
            if f.eval(p.coords())?.is_zero() {
                by_evaluation = false;
            }
        }
    }
    let coeffs = a.reduce(q)?;
    let by_coefficients = PURE_POWER_INDICES.iter().all(|&i| !coeffs[i].is_zero());
    Ok((by_evaluation, by_coefficients))
}

/// The group acts freely iff no fixed point of a nontrivial element lies
/// on the surface.
pub fn free_action_check(a: &QuinticCoefficients, q: u64) -> Result<bool, QuinticError> {
    let (by_evaluation, by_coefficients) = free_action_routes(a, q)?;
    if by_evaluation != by_coefficients {
        return Err(QuinticError::RouteMismatch { by_evaluation, by_coefficients });
    }
    Ok(by_evaluation)
}

/// A homogeneous form over `F_q` flattened for repeated evaluation,
/// together with its partial derivatives.
#[derive(Clone, Debug)]
struct CompiledForm {
    q: u64,
    nvars: usize,
    degree: usize,
    // forms[0] is the polynomial, forms[1..] its partials
    forms: Vec<Vec<(u64, Vec<u8>)>>,
}

impl CompiledForm {
    fn new(f: &SparsePolynomial<FieldElement>, q: u64) -> Result<Self, QuinticError> {
        let flatten = |p: &SparsePolynomial<FieldElement>| -> Vec<(u64, Vec<u8>)> {
            p.terms().map(|(e, c)| (c.value(), e.iter().map(|&n| n as u8).collect())).collect()
        };
        let mut forms = vec![flatten(f)];
        for v in 0..f.num_vars() {
            forms.push(flatten(&f.partial(v)?));
        }
        Ok(Self { q, nvars: f.num_vars(), degree: f.total_degree().unwrap_or(0) as usize, forms })
    }

    fn vanishes_with_gradient(&self, point: &[u64]) -> bool {
        let q = self.q;
        let mut powers = vec![vec![1u64; self.degree + 1]; self.nvars];
        for (row, &x) in powers.iter_mut().zip(point) {
            for n in 1..=self.degree {
                row[n] = row[n - 1] * x % q;
            }
        }
        self.forms.iter().all(|terms| {
            let mut acc = 0u64;
            for (c, e) in terms {
                let mut t = *c;
                for (j, &n) in e.iter().enumerate() {
                    t = t * powers[j][n as usize] % q;
                }
                acc = (acc + t) % q;
            }
            acc == 0
        })
    }

    /// First point of `P^{nvars-1}(F_q)` where the form and all partials
    /// vanish, in the enumeration order of `ProjectivePoints`.
    fn singular_point(&self) -> Option<ProjectivePoint> {
        let q = self.q;
        let n = self.nvars;
        for lead in 0..n {
            let free = (n - 1 - lead) as u32;
            let decode = |mut idx: u64| {
                let mut p = vec![0u64; n];
                p[lead] = 1;
                for j in (lead + 1..n).rev() {
                    p[j] = idx % q;
                    idx /= q;
                }
                p
            };
            let hit = (0..q.pow(free))
                .into_par_iter()
                .find_first(|&idx| self.vanishes_with_gradient(&decode(idx)));
            if let Some(idx) = hit {
                let coords = decode(idx).into_iter().map(|v| FieldElement::reduce(v as i64, q)).collect();
                return Some(ProjectivePoint::new(coords).expect("leading coordinate is 1"));
            }
        }
        None
    }
}

/// A point of `P^3(F_q)` where the quintic is singular, if any.
pub fn singular_point(a: &QuinticCoefficients, q: u64) -> Result<Option<ProjectivePoint>, QuinticError> {
    let f = build_quintic(a, q)?;
    Ok(CompiledForm::new(&f, q)?.singular_point())
}

/// No point of `P^3(F_q)` kills the quintic and its four partials.
pub fn smoothness_check(a: &QuinticCoefficients, q: u64) -> Result<bool, QuinticError> {
    Ok(singular_point(a, q)?.is_none())
}

/// The plane curve cut out on `{z_plane = 0}`, `plane` in `1..=4`.
pub fn plane_section(
    a: &QuinticCoefficients,
    plane: usize,
    q: u64,
) -> Result<SparsePolynomial<FieldElement>, QuinticError> {
    if !(1..=4).contains(&plane) {
        return Err(QuinticError::PlaneIndex(plane));
    }
    Ok(build_quintic(a, q)?.restrict_to_zero(plane - 1)?)
}

/// The section by `{z_plane = 0}` is a smooth plane quintic over `F_q`.
pub fn transversality_check(a: &QuinticCoefficients, plane: usize, q: u64) -> Result<bool, QuinticError> {
    let g = plane_section(a, plane, q)?;
    Ok(CompiledForm::new(&g, q)?.singular_point().is_none())
}

/// Dimension of the family of surfaces spanned by `monomials` modulo the
/// diagonal torus of `PGL_4`: `(#monomials - 1) - rank(n_i - n_1)`.
pub fn moduli_dimension(monomials: &[MonomialExponent]) -> usize {
    let Some(first) = monomials.first() else {
        return 0;
    };
    let rows: Vec<Vec<i64>> = monomials[1..]
        .iter()
        .map(|m| m.0.iter().zip(&first.0).map(|(&a, &b)| a as i64 - b as i64).collect())
        .collect();
    (monomials.len() - 1) - rank(&rows)
}

/// Rank of the exponent differences `n_i - n_1` of the invariant monomials.
pub fn torus_rank() -> usize {
    let m = enumerate_monomials();
    let rows: Vec<Vec<i64>> =
        m[1..].iter().map(|x| x.0.iter().zip(&m[0].0).map(|(&a, &b)| a as i64 - b as i64).collect()).collect();
    rank(&rows)
}

/// Dimension of the invariant family modulo isomorphism.
pub fn family_dimension() -> usize {
    moduli_dimension(&enumerate_monomials())
}

/// Hyperplanes invariant under `g`, as the exponents of their linear forms.
/// The dual action scales `z_j` by `eps^{w_j}`; with pairwise distinct
/// weights the only eigenlines are the coordinate forms.
pub fn invariant_hyperplanes(g: &GroupElement) -> Result<Vec<MonomialExponent>, QuinticError> {
    if !g.has_distinct_weights() {
        return Err(QuinticError::RepeatedWeights(g.weights()));
    }
    Ok((0..4)
        .map(|j| {
            let mut e = [0u8; 4];
            e[j] = 1;
            MonomialExponent(e)
        })
        .collect())
}
