use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid capacity `{0}`")]
    InvalidCapacity(String),
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("flow domain does not match the network edges: {0}")]
    DomainMismatch(String),
    #[error("flow is not feasible")]
    InfeasibleFlow,
    #[error("`{0}` is not a valid subset pair for this network")]
    InvalidSubsetPair(String),
    #[error("ill-shaped maxFromToAft query: {0}")]
    IllShapedQuery(String),
    #[error("typing has no entry for {0}")]
    MissingTypingEntry(String),
    #[error("{what} has {actual} {unit}, above the limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        unit: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("invalid reassembling tree: {0}")]
    InvalidTree(String),
    #[error("splice failed: {0}")]
    Splice(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("network `{0}` is not planar; a reassembling tree must be supplied")]
    NotPlanar(String),
    #[error("graph is not 3-regular: {0}")]
    NotCubic(String),
    #[error("unknown generator family `{0}`")]
    UnknownFamily(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
