//! Error type shared by the gadget generators.

use analysis::AnalysisError;
use graph_core::GraphError;
use thiserror::Error;

/// Errors arising while building gadgets, covers, or assembled instances.
#[derive(Debug, Error)]
pub enum GadgetError {
    /// Parameters outside the supported domain.
    #[error("bad parameters: {0}")]
    BadParams(String),
    /// The requested construction would exceed the node-count limit.
    #[error("requested graph with {requested} nodes exceeds the limit of {limit}")]
    SizeLimit {
        /// Node count the construction would have produced.
        requested: u64,
        /// The refusal threshold.
        limit: u64,
    },
    /// A construction-time guarantee failed to verify. This signals either a
    /// bug in the construction or parameters outside its validity range.
    #[error("certificate failed: {0}")]
    CertificateFailed(String),
    /// The requested instance does not fit the target size or family.
    #[error("does not fit: {0}")]
    DoesNotFit(String),
    /// An underlying exact-solver call failed.
    #[error(transparent)]
    Solver(#[from] AnalysisError),
    /// An underlying graph operation failed.
    #[error(transparent)]
    Graph(#[from] GraphError),
}
