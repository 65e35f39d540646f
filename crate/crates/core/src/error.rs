use thiserror::Error;

/// Errors shared by the whole workbench.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("denominator vanishes at q = {0}")]
    PoleAtPoint(String),
    #[error("pole at q = 1 is not removable")]
    PoleAtOne,
    #[error("tensor slot out of range: {0}")]
    PositionOutOfRange(String),
    #[error("operator is not skew-invertible over Q(q)")]
    NotSkewInvertible,
    #[error("generator index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("degree bound {bound} exceeded (needed {needed})")]
    DegreeBoundExceeded { bound: usize, needed: usize },
    #[error("the shift isomorphism degenerates for involutive symmetries (q = 1)")]
    InvolutiveUnsupported,
    #[error("skew-symmetrizer of order {0} is the zero operator")]
    ZeroSymmetrizer(usize),
    #[error("element is not a polynomial in e_1..e_m up to degree {0}")]
    NotInSpan(usize),
    #[error("rational expression failed exact division: {0}")]
    NotPolynomial(String),
    #[error("representation check failed: {0}")]
    RepresentationCheckFailed(String),
    #[error("central element does not act as a scalar operator")]
    NotScalar,
    #[error("character mismatch: representation gives {actual}, spectral prediction {expected}")]
    CharacterMismatch { actual: String, expected: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("construction validation failed: {0}")]
    ConstructionFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
