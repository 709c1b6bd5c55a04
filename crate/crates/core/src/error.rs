use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<Error> },

    #[error("graph6 cannot encode multigraphs")]
    UnsupportedFormat,

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("vertex {0} out of range")]
    InvalidVertex(usize),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("cannot splice: vertex degrees {host} and {guest} differ")]
    SpliceDegreeMismatch { host: usize, guest: usize },

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("cut is not tight")]
    ContractUntight,

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
