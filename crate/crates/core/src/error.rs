use thiserror::Error;

/// Errors surfaced by the search core.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Two behavior vectors of different dimension were compared.
    #[error("behavior dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An operation needed at least one other behavior to compare against.
    #[error("degenerate population: no behaviors to compare against")]
    DegeneratePopulation,

    /// A metric over pairs was requested on fewer than two members.
    #[error("need at least two members, got {0}")]
    TooFewMembers(usize),

    /// An aggregate over samples was requested on an empty slice.
    #[error("empty sample set")]
    EmptySamples,

    /// A parameter failed validation at construction time.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A domain or strategy name did not match any known kind.
    #[error("unknown {kind}: {name:?}")]
    UnknownName { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, CoreError>;
