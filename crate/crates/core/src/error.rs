use thiserror::Error;

/// Errors raised while building rings, searching for zero pairs, or
/// evaluating ring expressions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("ring too large: {what} has {order} elements, cap is {cap}")]
    CapExceeded { what: String, order: u128, cap: u128 },

    #[error("search budget exceeded: estimated {estimate} partial products, budget is {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("element {0} is not idempotent")]
    NotIdempotent(String),

    #[error("subset is not a two-sided ideal: {0}")]
    NotIdeal(String),

    #[error("subset is not a subring: {0}")]
    NotSubring(String),

    #[error("map is not a unital ring endomorphism: {0}")]
    NotEndomorphism(String),

    #[error("bimodule axiom fails: {0}")]
    BimoduleAxiom(String),

    #[error("ring axiom fails: {0}")]
    AxiomFailure(String),

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("parse error at byte {offset}: expected {expected}")]
    Parse { offset: usize, expected: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("internal consistency fault: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
