//! Analysis error types.

use thiserror::Error;

/// Errors from the exact oracles.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    /// The operation requires a nonempty graph.
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    /// The solver ran out of node-expansion budget; the chromatic number is
    /// bracketed by `[lo, hi]` (both bounds certified).
    #[error("solver budget exceeded; chromatic number lies in [{lo}, {hi}]")]
    BudgetExceeded { lo: u32, hi: u32 },
}
