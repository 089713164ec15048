use analysis::AnalysisError;
use netdec::NetDecError;
use thiserror::Error;

/// Errors from the coloring pipeline.
#[derive(Debug, Error)]
pub enum ColoringError {
    /// Malformed input (empty hide set, zero color classes, ...).
    #[error("bad parameters: {0}")]
    BadParams(String),
    /// The supplied decomposition is not valid for the cube of the input
    /// graph: not a partition, colors out of range, or same-color clusters
    /// adjacent within distance three.
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    /// The exact coloring solver gave up within its budget.
    #[error(transparent)]
    Solver(#[from] AnalysisError),
    /// Building the network decomposition failed.
    #[error(transparent)]
    Decomposition(#[from] NetDecError),
}
