use thiserror::Error;

/// Errors raised by lattice construction, evaluation and the deciders.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid lattice size {0}: must be between 1 and 256")]
    InvalidSize(usize),

    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },

    #[error("lattice law `{law}` violated at {witness:?}")]
    LawViolation { law: &'static str, witness: Vec<usize> },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("median needs an odd number of arguments, got {0}")]
    EvenMedian(usize),

    #[error("empty element set")]
    EmptySet,

    #[error("interval bounds are not ordered")]
    UnorderedInterval,

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("{0} is only defined on chains")]
    NotAChain(&'static str),

    #[error("function is not nondecreasing on the Boolean cube: {lower:?} <= {upper:?}")]
    NotMonotone { lower: Vec<usize>, upper: Vec<usize> },

    #[error("invalid fuzzy measure: {0}")]
    InvalidMeasure(String),

    #[error("contract violation: {0}")]
    NotPolynomial(String),

    #[error("simplex forms disagree: join {join}, meet {meet}, median {median}")]
    SimplexMismatch { join: usize, meet: usize, median: usize },

    #[error("{count} tables exceed the exhaustive cap of {cap}; use {hint}")]
    CapExceeded { count: String, cap: u64, hint: &'static str },

    #[error("theorem `{theorem}` cannot run on this plan: {reason}")]
    InvalidPlan { theorem: String, reason: String },

    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
