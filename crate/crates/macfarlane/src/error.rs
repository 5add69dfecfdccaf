use core::fmt;

/// Errors raised by algebra and geometry operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different quaternion algebras (or different
    /// quadratic fields in exact mode).
    AlgebraMismatch,
    /// Element has zero (or near-zero) norm and no inverse.
    NotInvertible,
    /// A matrix representation was requested for algebra parameters it does
    /// not support.
    UnsupportedRepresentation(&'static str),
    /// A precondition on the input domain was violated.
    Domain(&'static str),
    /// A quaternion fails the hyperboloid membership conditions, or a pair of
    /// points has Minkowski pairing below 1.
    InvalidPoint(&'static str),
    /// A model conversion was evaluated too close to the boundary at infinity.
    Boundary(&'static str),
    /// Translation length is undefined for parabolic isometries.
    UndefinedLength,
    /// Rotation angle is undefined for parabolic isometries.
    UndefinedAngle,
    /// Identity and parabolic isometries have no axis.
    NoAxis,
    /// The two points of a geodesic construction coincide.
    DegenerateGeodesic,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AlgebraMismatch => write!(f, "operands belong to different algebras"),
            Error::NotInvertible => write!(f, "element is not invertible"),
            Error::UnsupportedRepresentation(what) => {
                write!(f, "unsupported representation: {what}")
            }
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::InvalidPoint(what) => write!(f, "invalid point: {what}"),
            Error::Boundary(what) => write!(f, "boundary error: {what}"),
            Error::UndefinedLength => write!(f, "translation length undefined for parabolic"),
            Error::UndefinedAngle => write!(f, "rotation angle undefined for parabolic"),
            Error::NoAxis => write!(f, "isometry has no axis"),
            Error::DegenerateGeodesic => write!(f, "geodesic through coincident points"),
        }
    }
}

impl core::error::Error for Error {}
