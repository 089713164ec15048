//! Error type for the adversary harness.

use gadgets::GadgetError;
use thiserror::Error;

/// Errors arising while estimating failure rates or running attacks.
#[derive(Debug, Error)]
pub enum AdversaryError {
    /// The victim reads further than the cover certifies, so per-element
    /// failure accounting would be unsound. `declared` is `None` for victims
    /// with global locality.
    #[error("victim locality {} exceeds the cover radius {cover_t}",
            declared.map_or_else(|| "global".to_string(), |t| t.to_string()))]
    LocalityMismatch {
        /// The victim's declared reading radius, `None` when global.
        declared: Option<u32>,
        /// The cover's certification radius.
        cover_t: u32,
    },
    /// The victim returned a coloring of the wrong length.
    #[error("victim returned {got} colors for a graph with {expected} nodes")]
    BadVictimOutput {
        /// Node count of the graph the victim ran on.
        expected: usize,
        /// Length of the returned coloring.
        got: usize,
    },
    /// A cover element refers to nodes outside the host graph.
    #[error("cover does not match the host graph: {0}")]
    CoverMismatch(String),
    /// Gadget construction or assembly failed.
    #[error(transparent)]
    Gadget(#[from] GadgetError),
}
