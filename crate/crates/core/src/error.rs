use thiserror::Error;

/// Errors produced by group construction, graph algorithms and the
/// connectivity formulas.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("table is not a group: {0}")]
    NotAGroup(String),

    #[error("group of order {0} exceeds the supported maximum of {max}", max = crate::group::MAX_ORDER)]
    OrderTooLarge(u128),

    #[error("group is not nilpotent: {0}")]
    NotNilpotent(String),

    #[error("not a {0}-group of order > 1")]
    NotPGroup(u64),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("invalid separating-set spec for factor {factor}: {reason}")]
    InvalidSpacapan { factor: usize, reason: String },

    #[error("vertex connectivity is undefined for the empty graph")]
    EmptyGraph,

    #[error("group order {order} exceeds the oracle budget {budget}")]
    BudgetExceeded { order: usize, budget: usize },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
