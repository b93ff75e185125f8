use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex {vertex} (graph order {order})")]
    InvalidVertex { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("diameter undefined: graph is disconnected")]
    DiameterUndefined,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex set must be nonempty")]
    EmptySet,

    #[error("graph must have at least {min} vertices, got {got}")]
    OrderTooSmall { min: usize, got: usize },

    #[error("not a tree")]
    NotATree,

    #[error("total domination undefined: vertex {0} is isolated")]
    TotalDominationUndefined(usize),

    #[error("set is not a total dominating set")]
    NotTotalDominating,

    #[error("middle-graph fast path needs a connected base graph of order >= 3; use the general solver")]
    UseGeneralSolver,

    #[error("graph of order {0} exceeds the exact solver limit")]
    TooLarge(usize),

    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),

    #[error("invalid parameter for {family}: {constraint}")]
    InvalidParameter {
        family: &'static str,
        constraint: String,
    },

    #[error("hypothesis of {theorem} violated: {reason}")]
    Hypothesis {
        theorem: &'static str,
        reason: String,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn param(family: &'static str, constraint: impl Into<String>) -> Self {
        Error::InvalidParameter {
            family,
            constraint: constraint.into(),
        }
    }

    pub(crate) fn hypothesis(theorem: &'static str, reason: impl Into<String>) -> Self {
        Error::Hypothesis {
            theorem,
            reason: reason.into(),
        }
    }
}
