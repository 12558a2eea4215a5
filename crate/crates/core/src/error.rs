use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent user input (unknown names, mixed presentations, bad JSON).
    #[error("input error: {0}")]
    Input(String),
    /// Parameters outside a family's admissible domain.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// A presentation or structure violates an invariant the computation depends on.
    #[error("structural error: {0}")]
    Structural(String),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
