use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph6 supports at most 62 vertices, got {0}")]
    UnsupportedSize(usize),

    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("leak syntax error at column {column}: {reason}")]
    LeakSyntax { column: usize, reason: String },

    #[error("{0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("malformed forcing process: {0}")]
    MalformedProcess(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("state cap of {cap} states exceeded")]
    ResourceCap { cap: usize },
}
