use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),

    #[error("shape mismatch in {monad}: {detail}")]
    ShapeMismatch { monad: String, detail: String },

    #[error("enumeration exceeded the ceiling of {ceiling} terms")]
    BoundTooLarge { ceiling: usize },

    #[error("bound must be at least 1")]
    InvalidBound,

    #[error("indices must satisfy {n} >= i > j > k >= 1, got ({i}, {j}, {k})")]
    IndexOrder { i: usize, j: usize, k: usize, n: usize },

    #[error("split {split} out of range for a series of {n} monads")]
    SplitOutOfRange { split: usize, n: usize },

    #[error("no distributive law registered for ({0}, {1})")]
    MissingLaw(usize, usize),

    #[error("malformed route: {0}")]
    Route(String),

    #[error("{routes} routes exceed the comparison limit of {limit} monads")]
    RouteLimit { routes: usize, limit: usize },

    #[error("not an algebra: {0}")]
    NotAnAlgebra(String),

    #[error("syntax error at {pos}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        pos: usize,
        expected: Vec<String>,
        found: String,
    },

    #[error("{node} is not supported by the {theory} theory")]
    UnsupportedNode { theory: String, node: String },

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("ragged grid: inner strings have lengths {lengths:?}")]
    RaggedGrid { lengths: Vec<usize> },

    #[error("composability error: {0}")]
    Composability(String),

    #[error("globularity fails at cell `{cell}`: {detail}")]
    Globularity { cell: String, detail: String },

    #[error("malformed globular-set file: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn shape(monad: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            monad: monad.into(),
            detail: detail.into(),
        }
    }
}
