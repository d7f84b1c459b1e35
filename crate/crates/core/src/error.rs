use thiserror::Error;

/// A string that is not an exact rational literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational {0:?}: expected \"p/q\" or an integer")]
pub struct ParseRationalError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("indeterminate root count: polynomial is identically zero")]
    ZeroPolynomial,
    #[error("empty interval: lower bound must be strictly below upper bound")]
    EmptyInterval,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("parameters out of positive-definite range: alpha and beta must exceed -1")]
    OutOfRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearizeError {
    #[error("coefficient function has a pole at j = {0}")]
    SingularPoint(String),
    #[error("operation requires a {expected} coefficient vector, got {got}")]
    WrongFamily { expected: &'static str, got: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("formula undefined without limit on the boundary of Delta; use linearize_jacobi")]
    BoundaryOfDelta,
    #[error("parameters outside the formula's validity range: {0}")]
    OutOfRange(&'static str),
    #[error("index out of range: {0}")]
    BadIndex(&'static str),
    #[error("boundary limit required: a term of the series is singular")]
    LimitRequired,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("degenerate: b = 0 makes iota vanish identically")]
    Degenerate,
    #[error("singular point: {0}")]
    Singular(String),
    #[error("index out of range: {0}")]
    BadIndex(&'static str),
    #[error("exact identity failed: {0}")]
    IdentityFailed(String),
}
