use thiserror::Error;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no projective representative")]
    ZeroVector,
    #[error("division by zero")]
    DivisionByZero,
    #[error("induced pairing on the generated lattice is degenerate")]
    DegeneratePairing,
    #[error("generators are not contained in the ambient lattice")]
    NotSublattice,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("alternating form has odd dimension {0}")]
    OddDimension(usize),
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("matrix is singular")]
    Singular,
    #[error("lattice is not among the candidates after Galois substitution")]
    NotClosedUnderGalois,
    #[error("class is not in the Neron-Severi lattice: {0}")]
    NotInNs(String),
    #[error("adjunction gives a non-integral genus (D^2 + K.D = {0} is odd)")]
    NonIntegralGenus(i64),
    #[error("linear form is zero")]
    ZeroForm,
    #[error("linear form does not lie in the dual period module")]
    NotInDualModule,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("value too large for machine integers: {0}")]
    Overflow(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown complex multiplication case `{0}`")]
    UnknownCmCase(String),
    #[error("unknown candidate lattice `{0}`")]
    UnknownCandidate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
