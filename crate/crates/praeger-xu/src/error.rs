use thiserror::Error;

/// Errors produced by graph construction, group operations and searches.
#[derive(Debug, Error)]
pub enum Error {
    /// Parameters outside the supported range (usage error).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A vertex that does not belong to the graph at hand.
    #[error("foreign vertex: {0}")]
    ForeignVertex(String),

    /// Bit index outside a word.
    #[error("bit index {index} out of range for word of length {len}")]
    BitIndex { index: usize, len: usize },

    /// The requested operation is not defined for these inputs.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// Input exceeds a hard structural limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A search ran out of its configured budget before finishing.
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    /// No witness exists for the requested construction.
    #[error("no witness: {0}")]
    NoWitness(String),

    /// Two elements with incompatible underlying parameters were combined.
    #[error("parameter mismatch: {0}")]
    ParamMismatch(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
