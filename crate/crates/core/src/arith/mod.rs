//! Exact arithmetic: prime fields with fifth roots of unity, sparse
//! polynomials and projective point enumeration.

pub mod field;
pub mod linalg;
pub mod poly;
pub mod projective;

pub use field::{is_prime, primitive_fifth_root, FieldElement, DEFAULT_PRIMES};
pub use poly::{Coefficient, Exponent, SparsePolynomial};
pub use projective::{projective_points, ProjectivePoint, ProjectivePoints};
