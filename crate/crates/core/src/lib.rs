//! Exact checks for a family of numerical Godeaux surfaces built as free
//! quotients of quintics, and for the operator algebra that their
//! pre-spectral data feeds into.
//!
//! Everything here is finite and exact: prime-field arithmetic, integer
//! lattice arithmetic, and rational operator coefficients.

pub mod arith;
pub mod diophantine;
pub mod error;
pub mod pdo;
pub mod picard;
pub mod quintic;
pub mod report;
pub mod rr;
pub mod suites;

pub use arith::{FieldElement, ProjectivePoint, SparsePolynomial, DEFAULT_PRIMES};
pub use error::{ArithError, LatticeError, ParseError, PdoError, QuinticError, RrError};
pub use pdo::{BoldOrder, LinearChange, TruncatedOperator};
pub use picard::{DivisorClassOrbit, E8Vector, PicardClass};
pub use quintic::{GroupElement, MonomialExponent, QuinticCoefficients};
pub use report::{Budget, CheckEntry, Provenance, ReportFragment, ReportMetadata, Status, VerificationReport};
pub use rr::{NumericalDivisor, SurfaceInvariants};
pub use suites::{run_command, Command, SuiteConfig};
