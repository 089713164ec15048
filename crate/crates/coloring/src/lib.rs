//! Decomposition-driven graph coloring with round accounting.
//!
//! Given an `(α, d)` network decomposition of the cube of a graph, the
//! pipeline colors each color class in turn, spending `O(d)` rounds per
//! class: non-final clusters use the hiding trick ([`hide_coloring`]) so
//! that one color per cluster never faces an edge to the outside, final
//! clusters take a plain exact coloring. With exact per-cluster chromatic
//! numbers `≤ χ`, the remapped palette is `1..=α(χ−1)+1`.
//!
//! [`full_pipeline`] additionally builds the cube and the decomposition
//! itself (charging three input-graph rounds per cube round) and is the
//! entry point used by the command-line tools.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

mod error;
mod hide;
mod pipeline;

pub use error::ColoringError;
pub use hide::{hide_coloring, HidingRecord};
pub use pipeline::{color_with_decomposition, full_pipeline, Mode, PipelineResult};
