use thiserror::Error;

use crate::scalar::FieldDescriptor;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("field {0} is not supported here: {1}")]
    UnsupportedField(FieldDescriptor, String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("quotient does not terminate by degree {0}; the relation set does not cut out a finite-dimensional algebra")]
    NonNilpotentQuotient(usize),
    #[error("chain complex piece of dimension {dim} exceeds the cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("d∘d ≠ 0 in degree {p} of internal degree {q}")]
    NotAComplex { p: usize, q: usize },
    #[error("rank data admits no decomposition into uniserial modules: {0}")]
    InconsistentRankData(String),
    #[error("presented algebra and endomorphism algebra disagree: {0}")]
    PresentationMismatch(String),
    #[error("Grothendieck ring mismatch: {0}")]
    RingMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}
