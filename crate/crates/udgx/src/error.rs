use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Points are not in strictly convex counterclockwise position.
    NotConvex,
    /// Two input points coincide.
    DuplicatePoint,
    /// Weight vector malformed (length mismatch or non-finite entries).
    BadWeights,
    /// Radius must be finite and positive.
    InvalidRadius,
    /// A coordinate or parameter is NaN/infinite.
    NonFinite,
    /// Circle through collinear or coincident points requested.
    DegenerateCircle,
    /// The operation requires strictly positive weights.
    NonPositiveWeight,
    /// Subset size parameter out of range for the instance.
    BadK,
    /// General-position violation detected (cocircular points in exact mode).
    DegenerateInput,
    /// Pair or triple does not satisfy the canonical far/order conditions.
    NotCanonical,
    /// Instance exceeds the configured size cap for this solver.
    TooLarge(usize, usize),
    /// Instance too large for exhaustive oracle enumeration.
    TooLargeForOracle,
    /// Quadtree hit the depth cap on a multi-point cell with duplicates.
    DepthCapExceeded,
    /// Triple requested on fewer than three points, or similar size misuse.
    TooFewPoints,
    /// Malformed instance file.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotConvex => write!(f, "points are not in strictly convex CCW position"),
            Error::DuplicatePoint => write!(f, "duplicate input point"),
            Error::BadWeights => write!(f, "weights malformed (length or value)"),
            Error::InvalidRadius => write!(f, "radius must be finite and positive"),
            Error::NonFinite => write!(f, "non-finite coordinate or parameter"),
            Error::DegenerateCircle => write!(f, "degenerate circle (collinear or coincident points)"),
            Error::NonPositiveWeight => write!(f, "weights must be strictly positive here"),
            Error::BadK => write!(f, "k out of range for this instance"),
            Error::DegenerateInput => {
                write!(f, "general-position violation (cocircular points) in exact mode")
            }
            Error::NotCanonical => write!(f, "pair or triple is not canonical"),
            Error::TooLarge(n, cap) => {
                write!(f, "instance size {n} exceeds solver cap {cap} (override to proceed)")
            }
            Error::TooLargeForOracle => write!(f, "instance too large for exhaustive oracle"),
            Error::DepthCapExceeded => {
                write!(f, "quadtree depth cap exceeded on duplicate points")
            }
            Error::TooFewPoints => write!(f, "too few points for this operation"),
            Error::Parse(msg) => write!(f, "instance parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
