use thiserror::Error;

use crate::patterns::Evidence;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("malformed graph6 record: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),

    #[error("invalid multigraph: {0}")]
    InvalidMultigraph(String),

    #[error("result would have {0} vertices, the limit is 32")]
    SizeOverflow(usize),

    #[error("canonical form is limited to 10 vertices, got {0}")]
    TooLargeForCanonical(usize),

    #[error("{what} is limited to {max} vertices, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("blob graph would exceed {limit} blobs")]
    TooManyBlobs { limit: usize },

    #[error("input is outside the class: {0}")]
    ClassViolation(Box<Evidence>),

    #[error("internal check failed: {0}")]
    InternalCheckFailed(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no reduction rule applies: {0}")]
    StructureFallthrough(String),

    #[error("bad family parameters: {0}")]
    BadParams(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_size(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::TooLarge { what, n, max })
    } else {
        Ok(())
    }
}
