use thiserror::Error;

use crate::configuration::GenericityViolation;
use crate::exactq::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not symmetric")]
    NonSymmetric,

    #[error("matrix is singular")]
    Singular,

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("{root} is not a root of the polynomial")]
    NotARoot { root: Rat },

    #[error("non-generic configuration: {0}")]
    NonGeneric(String),

    #[error("configuration violates genericity: {0}")]
    Genericity(GenericityViolation),

    #[error("degenerate intersection: {0}")]
    DegenerateIntersection(String),

    #[error("not a Cayley-Bacharach configuration: relation space has dimension {dimension}")]
    NotCayleyBacharach { dimension: usize },

    #[error("transversality violated: Cayley-Bacharach coefficient of point {index} is zero")]
    TransversalityViolated { index: usize },

    #[error("zero-set mismatch at point {index}: {message}")]
    ZeroSetMismatch { index: usize, message: String },

    #[error("separation condition fails for negative index {neg_index}")]
    ConditionNotSatisfied { neg_index: usize },

    #[error("N = {given} does not exceed the threshold N* = {threshold}")]
    ThresholdNotExceeded { given: Box<Rat>, threshold: Box<Rat> },

    #[error("choose a different h: it vanishes at both extra points")]
    ChooseDifferentH,

    #[error("r not suitable: l_a(r) = {value} is not positive")]
    RNotSuitable { value: Rat },

    #[error("certificate does not verify for the target form")]
    InvalidCertificate,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Stable process exit codes.
pub mod exit {
    pub const CERTIFIED: i32 = 0;
    pub const CONDITION_FAILED: i32 = 1;
    pub const DEGENERATE: i32 = 2;
    pub const USAGE: i32 = 3;
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Usage(_) | Error::Io(_) | Error::DimensionMismatch { .. } => {
                exit::USAGE
            }
            Error::ConditionNotSatisfied { .. }
            | Error::ThresholdNotExceeded { .. }
            | Error::InvalidCertificate
            | Error::RNotSuitable { .. } => exit::CONDITION_FAILED,
            _ => exit::DEGENERATE,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
