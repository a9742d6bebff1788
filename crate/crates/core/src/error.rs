use thiserror::Error;

use crate::linalg::Field;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("mixed field descriptors {0} and {1}")]
    MixedFields(Field, Field),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),
    #[error("basis index {index} out of range for algebra of dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("algebra exceeds the configured size limit: {0}")]
    TooLarge(String),
    #[error("algebra failed validation: {0}")]
    InvalidAlgebra(String),
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("malformed heredity data: {0}")]
    MalformedHeredity(String),
    #[error("heredity data failed verification: {0}")]
    HeredityFailed(String),
    #[error("{0:?} is not an upper set")]
    NotUpperSet(Vec<String>),
    #[error("corrupt heredity data: {0}")]
    Corrupt(String),
    #[error("candidate is not a basis: {0}")]
    NotABasis(String),
    #[error("anti-involution not defined on basis element {0:?}")]
    IncompleteInvolution(String),
    #[error("the algebra has no unit")]
    NonUnital,
    #[error("operation requires a field coefficient ring")]
    NonField,
    #[error("not an idempotent: {0}")]
    NotIdempotent(String),
    #[error("idempotent is not adapted: {0}")]
    NotAdapted(String),
    #[error("inconsistent decomposition data: {0}")]
    InconsistentDecomposition(String),
    #[error("heredity data is not conforming: {0}")]
    NotConforming(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("idempotent lifting did not stabilize: {0}")]
    LiftingFailed(String),
    #[error("quotient is not finite dimensional within length cap {0}")]
    NotFiniteDimensional(usize),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("invalid catalog parameters: {0}")]
    InvalidParameters(String),
    #[error("basicization failed: {0}")]
    Basicize(String),
}
