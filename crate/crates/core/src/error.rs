use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex set must not be empty")]
    EmptySet,

    #[error("{0:?} is not a vertex cover of the graph")]
    NotVertexCover(Vec<usize>),

    #[error("{0:?} is not a potential maximal clique of the graph")]
    NotPmc(Vec<usize>),

    #[error("graph must be connected")]
    Disconnected,

    #[error("graph must be nonempty")]
    EmptyGraph,

    #[error("catalog was built for a different graph")]
    CatalogMismatch,

    #[error("{what} refuses graphs with more than {cap} vertices (got {n})")]
    TooLarge { what: &'static str, n: usize, cap: usize },

    #[error("vertex cover of size {size} exceeds the enumeration limit of {cap}")]
    CoverTooLarge { size: usize, cap: usize },

    #[error("no admissible potential maximal clique for block; catalog is incomplete")]
    IncompleteCatalog,
}
