use thiserror::Error;

/// Errors raised by graph construction, queries, I/O and the claim auditor.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("input graph `{0}` must be connected")]
    DisconnectedInput(&'static str),
    #[error("input graph `{0}` must have at least one vertex")]
    EmptyH(&'static str),
    #[error("input graph `{input}` needs at least {min} vertices")]
    GraphTooSmall { input: &'static str, min: usize },
    #[error("requested size {requested} exceeds the exhaustive cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("claim `{id}` takes {expected} graph(s), got {got}")]
    ArityMismatch { id: String, expected: usize, got: usize },
    #[error("unknown property `{0}`; known: {known}", known = crate::verify::PROPERTIES.join(", "))]
    UnknownProperty(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph6 long form (n > 62) is not supported")]
    UnsupportedLongForm,
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("{0}")]
    InvalidKind(String),
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
