use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ground set size {p} is outside 1..=63")]
    InvalidGroundSet { p: usize },

    #[error("exhaustive enumeration over {p} elements exceeds the cap of {cap}")]
    CapExceeded { p: usize, cap: usize },

    #[error("set function must vanish on the empty set, got F(∅) = {0}")]
    NonZeroEmpty(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("numerical inconsistency: {0}")]
    NumericalInconsistency(String),

    #[error("no convergence after {iterations} iterations (gap {gap:e})")]
    NoConvergence { iterations: usize, gap: f64 },

    #[error("recursion depth exceeded {limit}")]
    RecursionOverflow { limit: usize },

    #[error("line search is unbounded along the given direction")]
    Unbounded,

    #[error("scale factor must be non-negative, got {0}")]
    NegativeScale(f64),

    #[error("table is not concave at index {0}")]
    NotConcave(usize),

    #[error("concave table must start at zero, got {0}")]
    NotZeroAtZero(f64),

    #[error("matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("function is not non-decreasing: {0}")]
    MonotonicityRequired(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
