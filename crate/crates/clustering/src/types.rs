//! Clustering data model.

use graph_core::{Graph, NodeSet, UNREACHABLE};
use local_sim::RoundLedger;
use serde::{Deserialize, Serialize};

/// A (λ, d)-clustering: pairwise disjoint, pairwise non-adjacent clusters
/// plus the unclustered remainder.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Clustering {
    /// Pairwise disjoint, pairwise non-adjacent node sets.
    pub clusters: Vec<NodeSet>,
    /// Everything not in a cluster.
    pub unclustered: NodeSet,
    /// Measured figures and the round ledger for the run.
    pub meta: ClusteringMeta,
}

/// Measured properties of a [`Clustering`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClusteringMeta {
    /// Achieved unclustered fraction (not the target).
    pub lambda: f64,
    /// Largest cluster weak diameter, measured in the graph that was
    /// clustered. Zero when there are no clusters.
    pub max_diameter: u32,
    /// Smallest pairwise distance between two clusters in the clustered
    /// graph; `None` with fewer than two clusters.
    pub min_pairwise_distance: Option<u32>,
    /// For bootstrapped clusterings: the base clusterer's largest measured
    /// cluster diameter on the power graph it ran on.
    pub base_max_diameter: Option<u32>,
    /// Round charges, grouped by phase.
    pub ledger: RoundLedger,
}

impl Clustering {
    /// The wire shape used by file outputs:
    /// `{clusters, unclustered, lambda, max_diameter, rounds: {phase: count}}`.
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
            "unclustered": self.unclustered.as_slice(),
            "lambda": self.meta.lambda,
            "max_diameter": self.meta.max_diameter,
            "rounds": rounds,
        })
    }
}

/// Smallest distance in `g` between nodes of two different clusters.
///
/// One multi-source BFS: seed every clustered node with its cluster label;
/// for the closest pair, every node on a shortest connecting path is
/// nearest to one of the two endpointsʼ clusters, so some edge on the path
/// joins different labels and witnesses the exact minimum.
#[must_use]
pub fn min_pairwise_distance(g: &Graph, clusters: &[NodeSet]) -> Option<u32> {
    if clusters.len() < 2 {
        return None;
    }
    let n = g.n();
    let mut label: Vec<u32> = vec![u32::MAX; n];
    let mut dist: Vec<u32> = vec![UNREACHABLE; n];
    let mut queue = std::collections::VecDeque::new();
    for (ci, cluster) in clusters.iter().enumerate() {
        for u in cluster.iter() {
            label[u as usize] = ci as u32;
            dist[u as usize] = 0;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v as usize] == UNREACHABLE {
                dist[v as usize] = dist[u as usize] + 1;
                label[v as usize] = label[u as usize];
                queue.push_back(v);
            }
        }
    }
    let mut best: Option<u32> = None;
    for (u, v) in g.edges() {
        let (lu, lv) = (label[u as usize], label[v as usize]);
        if lu != u32::MAX && lv != u32::MAX && lu != lv {
            let d = dist[u as usize] + dist[v as usize] + 1;
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best
}

/// Largest weak diameter over `clusters` in `g` (0 when empty).
pub(crate) fn max_weak_diameter(g: &Graph, clusters: &[NodeSet]) -> u32 {
    clusters
        .iter()
        .map(|c| graph_core::weak_diameter(g, c).expect("clusters are nonempty and connected in host"))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{cycle_graph, path_graph};

    fn ns(nodes: &[u32]) -> NodeSet {
        NodeSet::from_unsorted(nodes.to_vec())
    }

    #[test]
    fn pairwise_distance_on_path() {
        let g = path_graph(10);
        let clusters = vec![ns(&[0, 1]), ns(&[5]), ns(&[9])];
        // 1 -> 5 is 4 hops; 5 -> 9 is 4 hops.
        assert_eq!(min_pairwise_distance(&g, &clusters), Some(4));
    }

    #[test]
    fn pairwise_distance_wraps_cycles() {
        let g = cycle_graph(8);
        let clusters = vec![ns(&[0]), ns(&[3])];
        assert_eq!(min_pairwise_distance(&g, &clusters), Some(3));
    }

    #[test]
    fn adjacent_clusters_have_distance_one() {
        let g = path_graph(4);
        assert_eq!(min_pairwise_distance(&g, &[ns(&[0, 1]), ns(&[2, 3])]), Some(1));
    }

    #[test]
    fn single_cluster_has_no_pairwise_distance() {
        let g = path_graph(4);
        assert_eq!(min_pairwise_distance(&g, &[ns(&[0, 1])]), None);
    }
}
