use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph with {0} vertices cannot be encoded as single-header graph6 (max 62)")]
    Unencodable(usize),
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("graph would need {vertices} vertices (cap is 64){}", iteration_suffix(*.iteration))]
    GraphTooLarge {
        vertices: usize,
        iteration: Option<usize>,
    },
    #[error("graph has no edges{}", iteration_suffix(*.iteration))]
    EmptyEdgeSet { iteration: Option<usize> },
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a line graph")]
    NotLineGraph,
    #[error("preimage chain unresolved after {0} steps")]
    DepthExceeded(usize),
    #[error("input is the exceptional graph {0}")]
    ExceptionalGraph(String),
    #[error("precondition violated: {0}")]
    Contract(String),
    #[error("invalid family L({k},{n}): need k in {{1,2}} and n >= k")]
    InvalidFamily { k: usize, n: usize },
    #[error("maximum degree is {found}, expected {expected}")]
    WrongDegree { expected: usize, found: usize },
    #[error("input is isomorphic to excluded graph {0}")]
    ExcludedInput(String),
    #[error("input is K3, whose root is ambiguous")]
    K3Input,
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("corpus too large: {0}")]
    CorpusTooLarge(String),
    #[error("unknown pattern {0:?}")]
    UnknownPattern(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("json error: {0}")]
    Json(String),
}

fn iteration_suffix(iteration: Option<usize>) -> String {
    match iteration {
        Some(i) => format!(" at iteration {i}"),
        None => String::new(),
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
