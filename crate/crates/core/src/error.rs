use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("successor {succ} of vertex {vertex} is out of range for {n} vertices")]
    SuccessorOutOfRange { vertex: usize, succ: usize, n: usize },

    #[error("vertex {vertex} is out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),

    #[error("operation requires an acyclic graph, but vertex {0} lies on a directed cycle")]
    Cyclic(usize),

    #[error("template is not sinkless: vertex {0} has no outgoing edge")]
    NotSinkless(usize),

    #[error("template is not strongly connected")]
    NotStronglyConnected,

    #[error("template is not ergodic at vertex {0}")]
    NotErgodic(usize),

    #[error("template has no loop")]
    NoLoop,

    #[error("template has a loop at vertex {0}")]
    HasLoop(usize),

    #[error("D_r needs r >= 1 and N >= r + 1 (got r = {r}, N = {size})")]
    InvalidDr { r: usize, size: usize },

    #[error("set is not {r}-forward-independent: member {from} reaches member {to} in {steps} steps")]
    NotForwardIndependent { r: usize, from: usize, to: usize, steps: usize },

    #[error("labeling violates the D_{r} edge rule on edge {from} -> {to}")]
    LabelingInvariant { r: usize, from: usize, to: usize },

    #[error("map is not a homomorphism on edge {from} -> {to}")]
    NotHomomorphism { from: usize, to: usize },

    #[error("no backward chain inside the strong component of template vertex {0}")]
    NoBackwardChain(usize),

    #[error("invalid walk string {0:?}: use only 'f' and 'b'")]
    InvalidWalk(String),

    #[error("sequence is not strictly increasing at index {0}")]
    NotIncreasing(usize),

    #[error("sequence must be nonempty")]
    EmptySequence,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("network: {0}")]
    Network(String),

    #[error("unregistered algorithm {0:?}")]
    UnregisteredAlgorithm(String),

    #[error("algorithm did not halt within {0} rounds")]
    RoundCapExceeded(usize),

    #[error("malformed input: {0}")]
    Format(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Format(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
