//! Network decomposition built from iterated clustering.
//!
//! [`network_decomposition`] partitions a graph into clusters colored
//! 1..=α such that same-color clusters are pairwise non-adjacent and every
//! cluster has small weak diameter. Colors 1..α−1 come from repeated
//! ε-clustering passes over the surviving nodes with ε = (ĝ/n)^{1/α};
//! whatever survives all passes is grouped into connected components,
//! which become the color-α clusters.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

use clustering::{eps_cluster, BaseClusterer, ClusteringError};
use graph_core::{connected_components, induced_subgraph, seed::mix_seed, weak_diameter, Graph, NodeSet};
use local_sim::RoundLedger;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Decomposition failure modes.
#[derive(Debug, Error)]
pub enum NetDecError {
    /// A parameter was outside its documented range.
    #[error("bad parameters: {0}")]
    BadParams(String),
    /// A clustering pass failed; surfaced, never patched over.
    #[error(transparent)]
    Clustering(#[from] ClusteringError),
}

/// A colored low-diameter cluster partition of a graph.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NetworkDecomposition {
    /// Clusters, partitioning the node set.
    pub clusters: Vec<NodeSet>,
    /// Color of each cluster (parallel to `clusters`), in 1..=α.
    /// Same-color clusters are pairwise non-adjacent.
    pub colors: Vec<u32>,
    /// Parameters and measured figures.
    pub meta: DecompositionMeta,
}

/// Measured properties of a [`NetworkDecomposition`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionMeta {
    /// Number of color classes.
    pub alpha: u32,
    /// Max of the clustering passes' measured cluster diameters and the
    /// color-α components' weak diameters; every cluster's host-graph
    /// weak diameter is ≤ d.
    pub d: u32,
    /// The per-pass unclustered-fraction target (ĝ/n)^{1/α}.
    pub eps: f64,
    /// Round charges accumulated over all passes.
    pub ledger: RoundLedger,
}

impl NetworkDecomposition {
    /// The wire shape used by file outputs:
    /// `{clusters, colors, alpha, d, rounds: {phase: count}}`.
    #[must_use]
    pub fn to_json_value(&self) -> serde_json::Value {
        let rounds: serde_json::Map<String, serde_json::Value> = self
            .meta
            .ledger
            .phases()
            .map(|(name, count)| (name.to_owned(), serde_json::json!(count)))
            .collect();
        serde_json::json!({
            "clusters": self.clusters.iter().map(NodeSet::as_slice).collect::<Vec<_>>(),
            "colors": self.colors,
            "alpha": self.meta.alpha,
            "d": self.meta.d,
            "rounds": rounds,
        })
    }
}

/// Decomposes `g` into α color classes of non-adjacent low-diameter
/// clusters.
///
/// For i = 1..α−1, runs [`eps_cluster`] on the subgraph induced by the
/// not-yet-clustered nodes (seeded per pass from `seed`), assigning the
/// produced clusters color i; the survivors of all passes are grouped
/// into connected components of the induced subgraph, each a color-α
/// cluster. ε is fixed once from the input size as (ĝ/n)^{1/α} with
/// ĝ = max(1, ⌈log₂ n⌉), the base stand-ins' diameter estimate.
///
/// Same-color non-adjacency in `g` is inherited directly: clustering
/// passes emit clusters non-adjacent in their induced working graph, and
/// any host edge between working nodes is a working edge; distinct
/// color-α components have no host edge between them for the same reason.
pub fn network_decomposition(
    g: &Graph,
    alpha: u32,
    base: BaseClusterer,
    seed: u64,
) -> Result<NetworkDecomposition, NetDecError> {
    if alpha == 0 {
        return Err(NetDecError::BadParams("alpha must be ≥ 1".into()));
    }
    let n = g.n();
    let g_hat = (n.max(1) as f64).log2().ceil().max(1.0);
    let eps = (g_hat / n.max(1) as f64).powf(1.0 / f64::from(alpha)).min(1.0);

    let mut clusters: Vec<NodeSet> = Vec::new();
    let mut colors: Vec<u32> = Vec::new();
    let mut ledger = RoundLedger::new();
    let mut d = 0u32;
    let mut survivors = NodeSet::from_unsorted((0..n as u32).collect());

    for pass in 1..alpha {
        if survivors.is_empty() {
            break;
        }
        let (wg, map) = induced_subgraph(g, &survivors).expect("survivor ids are in range");
        let cl = eps_cluster(&wg, eps, base, mix_seed(seed, u64::from(pass)))?;
        ledger.absorb(&cl.meta.ledger);
        d = d.max(cl.meta.max_diameter);
        for cluster in &cl.clusters {
            clusters.push(NodeSet::from_unsorted(
                cluster.iter().map(|v| map.to_orig(v)).collect(),
            ));
            colors.push(pass);
        }
        survivors = NodeSet::from_unsorted(
            cl.unclustered.iter().map(|v| map.to_orig(v)).collect(),
        );
    }

    // Color α: connected components of the surviving induced subgraph.
    // Grouping costs one flood per component, bounded by its diameter.
    if !survivors.is_empty() {
        let (wg, map) = induced_subgraph(g, &survivors).expect("survivor ids are in range");
        let mut grouping_rounds = 0u64;
        for component in connected_components(&wg) {
            let diameter =
                weak_diameter(&wg, &component).expect("components are connected");
            d = d.max(diameter);
            grouping_rounds = grouping_rounds.max(u64::from(diameter));
            clusters.push(NodeSet::from_unsorted(
                component.iter().map(|v| map.to_orig(v)).collect(),
            ));
            colors.push(alpha);
        }
        ledger.charge("component_grouping", grouping_rounds);
    }

    Ok(NetworkDecomposition {
        clusters,
        colors,
        meta: DecompositionMeta { alpha, d, eps, ledger },
    })
}
