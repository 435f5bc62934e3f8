use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex `{0}` is not allowed in a simple graph")]
    LoopRejected(String),

    #[error("duplicate edge `{0}`-`{1}`")]
    DuplicateEdge(String, String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("cut sides must be disjoint and non-empty")]
    InvalidCutSides,

    #[error("graph with {n} vertices exceeds the supported bound of {max}")]
    TooLarge { n: usize, max: usize },

    #[error("{0} is not a local maximum stable set")]
    HypothesisViolated(String),

    #[error("edge set is not a matching: {0}")]
    NotAMatching(String),

    #[error("invalid scan configuration: {0}")]
    InvalidConfig(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6 record {record}: {message}")]
    Graph6 { record: usize, message: String },
}
