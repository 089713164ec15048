//! Low-diameter graph clustering.
//!
//! Two base procedures produce (1/2, O(log n))-clusterings — a randomized
//! exponential-shift Voronoi partition and a deterministic ball carver —
//! and [`eps_cluster`] bootstraps either into an (ε, O(g/ε))-clustering:
//! at most an ε fraction of nodes left out, clusters pairwise non-adjacent,
//! with every guarantee re-audited on the finished output. Round costs are
//! tracked in a [`local_sim::RoundLedger`].

#![forbid(unsafe_code)]
#![warn(missing_docs)]

mod base;
mod eps;
mod error;
mod types;

pub use base::{base_cluster_det, base_cluster_rand, BaseClusterer, DEFAULT_BETA};
pub use eps::{eps_cluster, BOOTSTRAP_BETA};
pub use error::ClusteringError;
pub use types::{min_pairwise_distance, Clustering, ClusteringMeta};
