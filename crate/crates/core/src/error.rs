use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("self-loop at `{0}`")]
    SelfLoop(String),

    #[error("identification would create a self-loop on edge `{0}`--`{1}`")]
    GlueSelfLoop(String, String),

    #[error("prefix collision: `{0}`")]
    PrefixCollision(String),

    #[error("malformed label `{0}`")]
    MalformedLabel(String),

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),

    #[error("search budget must be positive")]
    ZeroBudget,

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("quotient would contain a loop: `{0}` and `{1}` are adjacent and in the same orbit")]
    WithinOrbitEdge(String, String),

    #[error("action is not free: `{vertex}` is fixed by `{element}`")]
    NotFree { vertex: String, element: String },

    #[error("`{0}` is not a subgraph of the parent graph")]
    NotSubgraph(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("group too small for the block construction: order {0} < 4")]
    GroupTooSmall(usize),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
