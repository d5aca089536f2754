use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("F_{0} has no primitive fifth root of unity ({0} mod 5 != 1)")]
    NoFifthRoot(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected {expected} coordinates, got {actual}")]
    Arity { expected: usize, actual: usize },
    #[error("variable index {index} out of range for {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },
    #[error("projective dimension must be at least 1")]
    BadDimension,
    #[error("all projective coordinates are zero")]
    ZeroPoint,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuinticError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("quintic coefficient vector is identically zero mod {0}")]
    ZeroCoefficients(u64),
    #[error("expected 12 quintic coefficients, got {0}")]
    CoefficientCount(usize),
    #[error("group element with weights {0:?} has a repeated weight; its fixed locus is positive-dimensional")]
    RepeatedWeights([u8; 4]),
    #[error("hyperplane index {0} outside 1..=4")]
    PlaneIndex(usize),
    #[error("free-action routes disagree: point evaluation says {by_evaluation}, coefficient criterion says {by_coefficients}")]
    RouteMismatch { by_evaluation: bool, by_coefficients: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("doubled coordinates {0:?} do not describe an E8 vector")]
    NotInLattice([i64; 8]),
    #[error("pairing {0} is not divisible by 4")]
    InexactPairing(i64),
    #[error("orbit of size {size} (expected 10)")]
    OrbitSize { size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RrError {
    #[error("parity violation: D^2 = {self_int}, D.K = {dot_k} have different parity")]
    Parity { self_int: i64, dot_k: i64 },
    #[error("Noether's formula fails: 12*{chi} != {k2} + {e}")]
    Noether { chi: i64, k2: i64, e: i64 },
    #[error("invariant {name} = {value} not divisible by the covering degree {degree}")]
    NotDivisible { name: &'static str, value: i64, degree: i64 },
    #[error("covering degree must be positive")]
    BadDegree,
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("chi = 1 - q + p_g fails for chi={chi}, q={q}, p_g={pg}")]
    Irregularity { chi: i64, q: i64, pg: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdoError {
    #[error("precision budget exhausted (result precision {0})")]
    BudgetExhausted(i64),
    #[error("term with derivative degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: u32, bound: u32 },
    #[error("order cannot be decided at x-precision {precision} with derivative bound {d_bound}")]
    Undecidable { precision: u32, d_bound: u32 },
    #[error("zero operator has no Gamma-order")]
    ZeroOperator,
    #[error("scaling parameters a and e must be nonzero")]
    SingularChange,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}
