use thiserror::Error;

/// Which side of a bipartite graph an index refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{side}-vertex {index} out of range (side has {bound} vertices)")]
    IndexOutOfRange { side: Side, index: usize, bound: usize },

    #[error("vertex {index} out of range (graph has {bound} vertices)")]
    VertexOutOfRange { index: usize, bound: usize },

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("B-vertex {vertex} has degree {degree}; at least 2 required")]
    DegreeTooSmall { vertex: usize, degree: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size cap exceeded: {what} is {size}, cap is {cap}")]
    SizeCap { what: &'static str, size: u64, cap: u64 },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("vertex {0} lies in both S and T")]
    Overlap(usize),

    #[error("T is not independent: edge ({0}, {1})")]
    NotIndependent(usize, usize),

    #[error("malformed binary tree: {0}")]
    MalformedTree(String),

    #[error("sampler gave up after {attempts} attempts ({detail})")]
    RetryCapExceeded { attempts: u64, detail: String },

    #[error("result contradicts a proved theorem: {0}")]
    Contradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
