use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Materialization would exceed the configured vertex budget.
    #[error("vertex budget exceeded: {vertices} vertices over budget {budget}")]
    VertexBudget { vertices: u128, budget: usize },

    /// A precondition of an operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A base graph contains a triangle where a triangle-free one is required.
    #[error("base graph has triangle {0}-{1}-{2}")]
    Triangle(usize, usize, usize),

    /// A coloring was paired with a graph it does not describe.
    #[error("graph descriptor mismatch: expected {expected}, got {got}")]
    DescriptorMismatch { expected: String, got: String },

    /// An internal consistency check failed; indicates a bug.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
