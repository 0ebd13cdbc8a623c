use thiserror::Error;

/// Errors raised by the exact-arithmetic, map and algebra layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomials use different variables")]
    VariableMismatch,
    #[error("division is not exact")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("denominator shares a factor with the modulus")]
    DenominatorNotInvertible,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("map is disconnected")]
    DisconnectedMap,
    #[error("cannot contract a loop")]
    ContractLoop,
    #[error("boundary arities differ: bottom {bottom}, top {top}")]
    BoundaryMismatch { bottom: usize, top: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("triangulation size must be at least 4, got {0}")]
    InvalidSize(usize),
    #[error("state sum limited to {limit} edges, graph has {edges}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("odd power of sqrt(d) in a closed evaluation")]
    OddRootParity,
    #[error("terms carry different sqrt(d) parities")]
    MixedParity,
    #[error("graph too large for the chromatic engine ({0} vertices)")]
    GraphTooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
