use thiserror::Error;

/// Errors raised by geometric operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("gram matrix is not hermitian")]
    NotHermitian,

    #[error("vectors are linearly dependent")]
    LinearlyDependent,

    #[error("degenerate flag: leading span of size {k} is degenerate")]
    DegenerateFlag { k: usize },

    #[error("point is isotropic")]
    SingularPoint,

    #[error("tangent vector has a null or negative metric square")]
    IndefiniteDirection,

    #[error("tangent vectors are based at different representatives")]
    BaseMismatch,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("inputs coincide (proportional)")]
    Coincident,

    #[error("points are orthogonal: the geodesic through them is not unique")]
    NoUniqueGeodesic,

    #[error("not a geodesic: {0}")]
    NotAGeodesic(String),

    #[error("wrong geometric regime: {0}")]
    Regime(String),

    #[error("point does not lie on the geodesic")]
    NotOnGeodesic,

    #[error("outside the domain: {0}")]
    Domain(String),

    #[error("point is the projection pole")]
    Pole,

    #[error("subsphere is empty")]
    EmptySubsphere,

    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),

    #[error("configuration spans a degenerate subspace")]
    DegenerateSpan,

    #[error("configurations are not geometrically equal")]
    NotGeometricallyEqual,
}

impl Error {
    /// True for errors caused by malformed or inconsistent input data, as
    /// opposed to well-formed input that falls outside an operation's regime.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::DimensionMismatch { .. } | Error::InvalidInput(_) | Error::NotHermitian
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
