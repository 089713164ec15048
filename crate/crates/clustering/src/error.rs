//! Clustering error types.

use thiserror::Error;

/// Failure modes of the clustering procedures.
#[derive(Debug, Error)]
pub enum ClusteringError {
    /// A parameter was outside its documented range.
    #[error("bad parameters: {0}")]
    BadParams(String),
    /// The finished run violated a promised guarantee; each string
    /// describes one violation. Never silently accepted.
    #[error("clustering guarantees violated: {0:?}")]
    GuaranteeViolated(Vec<String>),
}
