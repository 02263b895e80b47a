use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("cannot differentiate x{0}: a term has a half-integer exponent in it")]
    HalfIntegerDerivative(usize),
    #[error("cyclic variable substitution through x{0}")]
    CyclicSubstitution(usize),
    #[error("cannot substitute {value} into a half-integer power of x{var}: not a perfect square")]
    NonSquareSubstitution { var: usize, value: String },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(String),
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("polynomial has degree 0 in t")]
    ConstantPolynomial,
    #[error("polynomial is not monic in t")]
    NonMonic,
    #[error("half-integer exponent where an integer exponent is required")]
    HalfIntegerExponent,
    #[error("invalid edge {0:?}: {1}")]
    InvalidEdge(Vec<i64>, &'static str),
    #[error("no edges exist for m = {0}: support must have at least two indices")]
    TooFewVariables(usize),
    #[error("q must be at least 1")]
    InvalidQ,
    #[error("duplicate vertex in vertex set")]
    DuplicateVertex,
    #[error("empty vertex set")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("invalid sites: {0}")]
    InvalidSites(String),
    #[error("lift failed: cycle closure mismatch at point {0:?}")]
    CycleInconsistency(Vec<i64>),
    #[error("component touches the enumeration box and may be incomplete")]
    BoundaryComponent,
    #[error("box radius {0} does not contain all sites")]
    BoxTooSmall(i64),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
