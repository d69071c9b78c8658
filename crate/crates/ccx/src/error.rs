use thiserror::Error;

/// Errors shared across the toolkit.
///
/// `BoundExhausted` is reserved for bounded searches: it means "not found
/// within the given enumeration bound", never "does not exist".
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("genus {0} is not supported here")]
    BadGenus(usize),

    #[error("weight vector has {got} entries, triangulation has {want} edges")]
    WeightLength { got: usize, want: usize },

    #[error("weight vector violates the normal-coordinate matching conditions")]
    NotNormal,

    #[error("expected a single-component multicurve, found {0} components")]
    NotConnected(usize),

    #[error("curve is not essential")]
    NotEssential,

    #[error("curves are not pairwise disjoint (pair {0}, {1})")]
    NotDisjoint(usize, usize),

    #[error("curve is separating")]
    Separating,

    #[error("curve is not separating")]
    NotSeparating,

    #[error("unknown vertex {0}")]
    UnknownVertex(u32),

    #[error("homology degree {0} unsupported (max 2)")]
    DegreeUnsupported(usize),

    #[error("not a simplex: {0:?}")]
    NotASimplex(Vec<u32>),

    #[error("invalid edge loop at position {0}")]
    InvalidLoop(usize),

    #[error("certificate move {index} rejected: {reason}")]
    BadMove { index: usize, reason: String },

    #[error("search bound exhausted in {stage}")]
    BoundExhausted { stage: &'static str },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
