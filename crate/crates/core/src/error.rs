use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A contested seed node whose contenders all have product score zero.
    #[error("seed node {node} is contested only by players with product score 0")]
    UndefinedDistribution { node: usize },

    #[error("player {player} selected {requested} seeds but has budget {budget}")]
    BudgetExceeded {
        player: usize,
        budget: usize,
        requested: usize,
    },

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("graph has {nodes} nodes, exhaustive search is limited to {limit}")]
    GraphTooLarge { nodes: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// True for errors caused by bad user input rather than I/O.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Io(_) | Error::Csv(_))
    }
}
