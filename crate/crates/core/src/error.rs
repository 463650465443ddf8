use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {0} out of range")]
    VertexOutOfRange(VertexId),

    #[error("edge {0} out of range")]
    EdgeOutOfRange(EdgeId),

    #[error("instance too large for exact epsilon: component with {size} vertices exceeds cap {cap}")]
    EpsilonCap { size: usize, cap: usize },

    #[error("circuit cap exceeded: more than {0} circuits")]
    CircuitCap(usize),

    #[error("signed circuit cap exceeded: more than {0} signed circuits")]
    SignedCircuitCap(usize),

    #[error("search node cap exceeded: more than {0} nodes")]
    NodeCap(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not coverable")]
    NotCoverable,

    #[error("graph has a K4 minor")]
    NotK4MinorFree,

    #[error("not series-parallel with respect to terminals ({x}, {y})")]
    NotSeriesParallel { x: VertexId, y: VertexId },

    #[error("terminal violation: {0}")]
    Terminals(String),

    #[error("edge set is not a circuit")]
    NotACircuit,

    #[error("member trace matches no pattern: {0:?}")]
    Unclassifiable(Vec<EdgeId>),

    #[error("unknown gadget `{0}`")]
    UnknownGadget(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("could not reach {wanted} coverable graphs within {draws} draws")]
    CorpusExhausted { wanted: usize, draws: usize },
}
