use thiserror::Error;

/// Errors raised by the semigroup, sequence and search APIs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid semigroup parameters k={k}, n={n}: both must be at least 1")]
    InvalidParams { k: u32, n: u32 },

    #[error("element index {index} outside [1, {max}]")]
    InvalidIndex { index: u32, max: u32 },

    #[error("operation requires a nonempty sequence")]
    EmptySequence,

    #[error("{g} is not a generator of Z/{n}Z")]
    NotGenerator { g: u32, n: u32 },

    #[error("invalid term {value}: integer multisets must have positive terms")]
    NonPositiveTerm { value: u32 },

    #[error("brute-force oracle refuses length {length} (cap {cap})")]
    OracleCap { length: usize, cap: usize },

    #[error("cannot parse token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("search refused: {estimate} exceeds the budget of {limit} ({detail})")]
    Budget {
        estimate: u128,
        limit: u128,
        detail: String,
    },

    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
