use thiserror::Error;

/// Errors raised by the workbench operations.
///
/// Negative mathematical verdicts (a failed adjunction condition, a CPO that
/// is not isomorphic to its function space) are report content and never
/// show up here, except for [`Error::NotIsomorphic`], which is returned by
/// operations that *require* the isomorphism to exist.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown CPO name `{0}`")]
    UnknownCpo(String),

    #[error("element {0} is not valid in this order")]
    BadElement(String),

    #[error("invalid open segment: {0}")]
    InvalidSegment(String),

    #[error("bad index: {0}")]
    BadIndex(String),

    #[error("bad depth {0}: at least two stages are required")]
    BadDepth(usize),

    #[error("not isomorphic to its function space: {0}")]
    NotIsomorphic(String),

    #[error("not the boundary element: {0}")]
    NotBoundary(String),

    #[error("invalid order word: {0}")]
    InvalidWord(String),

    #[error("invalid string: {0}")]
    InvalidString(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
