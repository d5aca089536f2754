//! Points of `P^n(F_q)` in normalized form.

use std::fmt;

use super::field::{is_prime, FieldElement};
use crate::error::ArithError;

/// A projective point whose first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: Vec<FieldElement>,
}

impl ProjectivePoint {
    /// Normalizes by dividing through by the first nonzero coordinate.
    pub fn new(coords: Vec<FieldElement>) -> Result<Self, ArithError> {
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(ArithError::ZeroPoint)?;
        let inv = lead.inverse()?;
        Ok(Self { coords: coords.iter().map(|&c| c * inv).collect() })
    }

    /// The `index`-th coordinate point `(0:..:1:..:0)` of `P^dim(F_q)`.
    pub fn coordinate(index: usize, dim: usize, q: u64) -> Self {
        let coords = (0..=dim)
            .map(|j| if j == index { FieldElement::one(q) } else { FieldElement::zero(q) })
            .collect();
        Self { coords }
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{}", c.value())?;
        }
        write!(f, ")")
    }
}

/// Streams every point of `P^dim(F_q)` exactly once.
///
/// Points are grouped by the position of the leading 1 (first coordinate
/// first), and within a group the trailing coordinates count up like an
/// odometer with the last coordinate fastest.
#[derive(Clone, Debug)]
pub struct ProjectivePoints {
    q: u64,
    dim: usize,
    lead: usize,
    tail: Vec<u64>,
    done: bool,
}

impl ProjectivePoints {
    pub fn new(q: u64, dim: usize) -> Result<Self, ArithError> {
        if !is_prime(q) {
            return Err(ArithError::NotPrime(q));
        }
        if dim == 0 {
            return Err(ArithError::BadDimension);
        }
        Ok(Self { q, dim, lead: 0, tail: vec![0; dim], done: false })
    }

    /// `(q^(dim+1) - 1) / (q - 1)`.
    pub fn count(q: u64, dim: usize) -> u64 {
        (0..=dim as u32).map(|k| q.pow(k)).sum()
    }
}

impl Iterator for ProjectivePoints {
    type Item = ProjectivePoint;

    fn next(&mut self) -> Option<ProjectivePoint> {
        if self.done {
            return None;
        }
        let q = self.q;
        let free = self.dim - self.lead;
        let mut coords = Vec::with_capacity(self.dim + 1);
        coords.extend((0..self.lead).map(|_| FieldElement::zero(q)));
        coords.push(FieldElement::one(q));
        coords.extend(self.tail[..free].iter().map(|&v| FieldElement::reduce(v as i64, q)));
        let point = ProjectivePoint { coords };

        // advance the odometer over the `free` trailing coordinates
        let mut k = free;
        loop {
            if k == 0 {
                self.lead += 1;
                if self.lead > self.dim {
                    self.done = true;
                }
                self.tail.iter_mut().for_each(|v| *v = 0);
                break;
            }
            k -= 1;
            self.tail[k] += 1;
            if self.tail[k] < q {
                break;
            }
            self.tail[k] = 0;
        }
        Some(point)
    }
}

/// All points of `P^dim(F_q)`, collected.
pub fn projective_points(q: u64, dim: usize) -> Result<Vec<ProjectivePoint>, ArithError> {
    Ok(ProjectivePoints::new(q, dim)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn point_counts() {
        assert_eq!(projective_points(2, 1).unwrap().len(), 3);
        assert_eq!(projective_points(11, 3).unwrap().len(), 1464);
        assert_eq!(projective_points(11, 2).unwrap().len(), 133);
        assert_eq!(ProjectivePoints::count(11, 3), 1464);
        assert!(projective_points(11, 0).is_err());
        assert!(projective_points(9, 2).is_err());
    }

    #[test]
    fn enumeration_has_no_repeats_and_is_normalized() {
        for q in [2u64, 3, 5, 7, 11] {
            for dim in 1..=3 {
                let pts = projective_points(q, dim).unwrap();
                assert_eq!(pts.len() as u64, ProjectivePoints::count(q, dim));
                let set: HashSet<_> = pts.iter().cloned().collect();
                assert_eq!(set.len(), pts.len());
                for p in &pts {
                    let renorm = ProjectivePoint::new(p.coords().to_vec()).unwrap();
                    assert_eq!(&renorm, p);
                }
            }
        }
    }

    #[test]
    fn normalization_identifies_scalar_multiples() {
        let q = 11;
        let v: Vec<_> = [0, 3, 5, 7].iter().map(|&x| FieldElement::new(x, q).unwrap()).collect();
        let w: Vec<_> = v.iter().map(|&x| x * FieldElement::new(4, q).unwrap()).collect();
        assert_eq!(ProjectivePoint::new(v).unwrap(), ProjectivePoint::new(w).unwrap());
        let zero = vec![FieldElement::zero(q); 3];
        assert_eq!(ProjectivePoint::new(zero), Err(ArithError::ZeroPoint));
    }
}
