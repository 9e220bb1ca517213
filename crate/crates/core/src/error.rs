use thiserror::Error;

/// Errors raised by graph construction, solvers, oracles and reporting.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is isolated (pass allow_isolated to permit it)")]
    IsolatedVertex(usize),

    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("edge count {m} out of range [{min}, {max}] for {n} vertices")]
    EdgeCountOutOfRange {
        n: usize,
        m: usize,
        min: usize,
        max: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} oracle limited to n <= {limit}, graph has n = {n}")]
    OracleLimit {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {achieved:e})")]
    NoConvergence { sweeps: usize, achieved: f64 },

    #[error("eigen residual {residual:e} exceeds tolerance {tolerance:e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },

    #[error("matrix order {n} exceeds the dense limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero vector has no direction")]
    ZeroVector,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
