use thiserror::Error;

/// Everything that can go wrong across the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },

    #[error("graph has {0} vertices; at most {max} are supported", max = crate::MAX_VARS)]
    TooManyVertices(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("ideals live in different polynomial rings ({0} vs {1} variables)")]
    UniverseMismatch(usize, usize),

    #[error("ideal is not square-free")]
    NotSquareFree,

    #[error("operation needs a proper nonzero ideal")]
    ZeroOrUnitIdeal,

    #[error("cannot parse monomial `{0}`")]
    MonomialSyntax(String),

    #[error("size limit exceeded: {what} reached {size} (cap {cap})")]
    SizeLimit { what: &'static str, size: usize, cap: usize },

    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
