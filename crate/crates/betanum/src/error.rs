use std::fmt;

/// Errors produced while constructing fields or running checkers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// A monic polynomial was required.
    NotMonic,
    /// The given interval does not isolate a root of the polynomial.
    NoRootInInterval,
    /// The base must be a real number greater than 1.
    BaseNotGreaterThanOne,
    /// Embedding index out of range.
    InvalidEmbedding(usize),
    /// The target space of the contracting embedding is empty (degree 1).
    DegreeTooSmall,
    /// An argument was outside its documented domain.
    OutOfRange(String),
    /// The base is not Pisot, so the contracting series does not converge.
    NotPisot,
    /// The base is not an algebraic unit; the non-archimedean component of
    /// the tile is not representable here and is refused rather than dropped.
    NotUnit,
    /// A point cloud operation received an empty cloud.
    EmptyCloud,
    /// Text input failed to parse; carries a byte position and message.
    Parse { position: usize, message: String },
    /// A digit word failed the round-trip validation against its base.
    WordMismatch(String),
    /// An internal invariant was violated (reported, never silently ignored).
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "polynomial must be nonzero"),
            Error::NotMonic => write!(f, "polynomial must be monic"),
            Error::NoRootInInterval => write!(f, "interval does not isolate a root"),
            Error::BaseNotGreaterThanOne => write!(f, "base must be a real number > 1"),
            Error::InvalidEmbedding(i) => write!(f, "invalid embedding index {i}"),
            Error::DegreeTooSmall => {
                write!(f, "degree must be at least 2 for the contracting embedding")
            }
            Error::OutOfRange(msg) => write!(f, "argument out of range: {msg}"),
            Error::NotPisot => write!(f, "base is not Pisot"),
            Error::NotUnit => write!(
                f,
                "base is not an algebraic unit; the inverse-limit component of the \
                 tile is nontrivial and is not supported"
            ),
            Error::EmptyCloud => write!(f, "point cloud is empty"),
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::WordMismatch(msg) => write!(f, "digit word round-trip failed: {msg}"),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
