use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token {token:?}: {reason}")]
    MalformedToken { token: String, reason: &'static str },

    #[error("pointer magnitude {0} is below 2")]
    MagnitudeTooSmall(u32),

    #[error("compact format needs magnitudes <= 9, found {0}")]
    NotCompactable(u32),

    #[error("string is not legal: {0}")]
    NotLegal(String),

    #[error("invalid micronuclear arrangement: {0}")]
    InvalidArrangement(String),

    #[error("pointer {0} is not in the domain")]
    NotInDomain(u32),

    #[error("position {position} is outside 0..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("domain is not of the form {{2,...,kappa}}")]
    GappedDomain,

    #[error("the empty string has no reduction graph components to count")]
    EmptyString,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("malformed JSON: {0}")]
    Json(String),

    #[error("graph is outside the supported class: {0}")]
    UnsupportedGraph(String),

    #[error("instance of size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("rspos index {k} is outside 1..={kappa}")]
    RsposOutOfRange { k: usize, kappa: usize },

    #[error("rule {0} is not applicable")]
    RuleNotApplicable(String),

    #[error("malformed rule {0:?}")]
    MalformedRule(String),
}

pub type Result<T> = std::result::Result<T, Error>;
