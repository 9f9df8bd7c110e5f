use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by graph construction, exact linear algebra and the
/// verification harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),

    #[error("loop at vertex {0} not allowed")]
    LoopEdge(usize),

    #[error("duplicate edge between {0} and {1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex sequence is not a cycle: {0}")]
    NotACycle(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph is not unicyclic")]
    NotUnicyclic,

    #[error("graph has no cycle")]
    NoCycle,

    #[error("cycles are not pairwise vertex-disjoint (or some block is neither an edge nor a cycle)")]
    CyclesNotDisjoint,

    #[error("graph is a disjoint union of cycles; contraction is undefined")]
    BareCycles,

    #[error("graph does not attain the {0} bound")]
    BoundNotAttained(&'static str),

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("matrix is not Hermitian at entry ({0},{1})")]
    NotHermitian(usize, usize),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
