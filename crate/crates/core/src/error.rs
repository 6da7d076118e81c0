use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("sets over different universes ({left} vs {right} vertices)")]
    UniverseMismatch { left: usize, right: usize },

    #[error("include and exclude sets overlap in vertex `{0}`")]
    OverlappingQuery(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid vertex order: {0}")]
    InvalidPermutation(String),

    #[error("element {element} is outside a universe of size {universe}")]
    OutOfUniverse { element: usize, universe: usize },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("brute force refused: {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
