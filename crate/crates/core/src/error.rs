use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GemError {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("color {color} out of range for dimension {dimension}")]
    ColorOutOfRange { color: usize, dimension: usize },

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },

    #[error("validation of {family} failed: {reason}")]
    Validation { family: String, reason: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),

    #[error("operation requires dimension {expected}, got {actual}")]
    WrongDimension { expected: usize, actual: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("search exhausted without a witness for {0}")]
    SearchExhausted(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, GemError>;
