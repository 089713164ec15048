//! Exact graph analysis: chromatic numbers with verifiable certificates,
//! local chromatic numbers, girth, proper-coloring checks, and independent
//! verifiers for clusterings and network decompositions.
//!
//! The chromatic solver is exact. It brackets the answer between a greedy
//! clique and a DSATUR upper bound, then closes the gap with a chain of
//! deciders (bipartite BFS, an equal-layer transfer DP, a bounded-frontier
//! DP, and budgeted branch-and-bound). Budget exhaustion is an explicit
//! error carrying the certified bracket, never a silently wrong answer.

#![forbid(unsafe_code)]

mod certificate;
mod chromatic;
mod color;
mod error;
mod frontier;
mod girth;
mod local;
mod proper;
mod sweep;
mod verify;

pub use certificate::{graph_sha256, ChromaticCertificate};
pub use chromatic::{
    dsatur_greedy, exact_chromatic_number, greedy_clique, DEFAULT_SOLVER_BUDGET,
};
pub use color::Color;
pub use error::AnalysisError;
pub use girth::{girth, Girth};
pub use local::local_chromatic_number;
pub use proper::{is_proper_coloring, ProperViolation};
pub use verify::{verify_clustering, verify_decomposition, VerifyReport};
