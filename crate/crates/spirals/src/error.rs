use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graded spaces do not match")]
    SpaceMismatch,

    #[error("element is not nilpotent")]
    NotNilpotent,

    #[error("corrupted sl2 triple: {0}")]
    CorruptTriple(String),

    #[error("cocharacter weights must be integers, found {0}")]
    NonIntegralWeight(String),

    #[error("cocharacters are not aligned on the same weighted basis")]
    BasisMismatch,

    #[error("per-label basis is not invertible at label {0}")]
    SingularBasis(usize),

    #[error("dimension constraint violated: {0}")]
    Constraint(String),

    #[error("duality violated: {0}")]
    Duality(String),

    #[error("enumeration size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("{0}")]
    Parse(String),
}
