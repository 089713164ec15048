//! Independent verifiers for clusterings and network decompositions.
//!
//! These re-derive every promised property from the graph and the raw node
//! sets, so they are usable as acceptance oracles for the construction
//! code (which therefore never gets to grade its own homework).

use graph_core::{weak_diameter, Graph, NodeSet};
use serde::Serialize;

/// Outcome of a verification run: empty means every clause held.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub violations: Vec<String>,
}

impl VerifyReport {
    #[must_use]
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `clusters` plus `unclustered` form a (λ, d)-clustering of
/// `g`: (a) the clusters are pairwise disjoint, pairwise non-adjacent, and
/// together with `unclustered` cover every node exactly once; (b) every
/// cluster has weak diameter at most `d` in `g`; (c) at most a λ fraction
/// of nodes is unclustered (with an absolute epsilon so that exact
/// rational thresholds like n/4 pass on the boundary).
pub fn verify_clustering(
    g: &Graph,
    clusters: &[NodeSet],
    unclustered: &NodeSet,
    lambda: f64,
    d: u32,
) -> VerifyReport {
    let n = g.n();
    let mut violations = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (ci, cluster) in clusters.iter().enumerate() {
        if cluster.is_empty() {
            violations.push(format!("(a) cluster {ci} is empty"));
        }
        for u in cluster.iter() {
            if u as usize >= n {
                violations.push(format!("(a) cluster {ci} contains out-of-range node {u}"));
                continue;
            }
            match owner[u as usize] {
                Some(prev) => violations
                    .push(format!("(a) node {u} lies in clusters {prev} and {ci}")),
                None => owner[u as usize] = Some(ci),
            }
        }
    }
    let mut covered = vec![false; n];
    for (u, o) in owner.iter().enumerate() {
        covered[u] = o.is_some();
    }
    for u in unclustered.iter() {
        if u as usize >= n {
            violations.push(format!("(a) unclustered set contains out-of-range node {u}"));
            continue;
        }
        if let Some(ci) = owner[u as usize] {
            violations.push(format!("(a) node {u} is both unclustered and in cluster {ci}"));
        }
        covered[u as usize] = true;
    }
    for (u, c) in covered.iter().enumerate() {
        if !c {
            violations.push(format!("(a) node {u} is neither clustered nor unclustered"));
        }
    }
    for (u, v) in g.edges() {
        if let (Some(cu), Some(cv)) = (owner[u as usize], owner[v as usize]) {
            if cu != cv {
                violations.push(format!(
                    "(a) clusters {cu} and {cv} are adjacent through edge ({u}, {v})"
                ));
            }
        }
    }
    for (ci, cluster) in clusters.iter().enumerate() {
        if cluster.is_empty() || cluster.iter().any(|u| u as usize >= n) {
            continue; // already reported under (a)
        }
        match weak_diameter(g, cluster) {
            Ok(diam) if diam <= d => {}
            Ok(diam) => violations.push(format!(
                "(b) cluster {ci} has weak diameter {diam} > {d}"
            )),
            Err(e) => violations.push(format!("(b) cluster {ci}: {e}")),
        }
    }
    let budget = lambda * n as f64 + 1e-9;
    if (unclustered.len() as f64) > budget {
        violations.push(format!(
            "(c) {} unclustered nodes exceed the allowed {:.3}",
            unclustered.len(),
            lambda * n as f64
        ));
    }
    VerifyReport { violations }
}

/// Checks that colored clusters form an (α, d)-network decomposition of
/// `g`: the clusters partition the nodes, every cluster color lies in
/// 1..=α, every cluster has weak diameter at most `d`, and no edge joins
/// two distinct clusters of the same color.
pub fn verify_decomposition(
    g: &Graph,
    clusters: &[(NodeSet, u32)],
    alpha: u32,
    d: u32,
) -> VerifyReport {
    let n = g.n();
    let mut violations = Vec::new();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (ci, (cluster, color)) in clusters.iter().enumerate() {
        if cluster.is_empty() {
            violations.push(format!("partition: cluster {ci} is empty"));
        }
        if !(1..=alpha).contains(color) {
            violations.push(format!(
                "colors: cluster {ci} has color {color} outside 1..={alpha}"
            ));
        }
        for u in cluster.iter() {
            if u as usize >= n {
                violations.push(format!(
                    "partition: cluster {ci} contains out-of-range node {u}"
                ));
                continue;
            }
            match owner[u as usize] {
                Some(prev) => violations.push(format!(
                    "partition: node {u} lies in clusters {prev} and {ci}"
                )),
                None => owner[u as usize] = Some(ci),
            }
        }
    }
    for (u, o) in owner.iter().enumerate() {
        if o.is_none() {
            violations.push(format!("partition: node {u} is in no cluster"));
        }
    }
    for (ci, (cluster, _)) in clusters.iter().enumerate() {
        if cluster.is_empty() || cluster.iter().any(|u| u as usize >= n) {
            continue;
        }
        match weak_diameter(g, cluster) {
            Ok(diam) if diam <= d => {}
            Ok(diam) => violations.push(format!(
                "diameter: cluster {ci} has weak diameter {diam} > {d}"
            )),
            Err(e) => violations.push(format!("diameter: cluster {ci}: {e}")),
        }
    }
    for (u, v) in g.edges() {
        if let (Some(cu), Some(cv)) = (owner[u as usize], owner[v as usize]) {
            if cu != cv && clusters[cu].1 == clusters[cv].1 {
                violations.push(format!(
                    "adjacency: same-color clusters {cu} and {cv} touch through edge ({u}, {v})"
                ));
            }
        }
    }
    VerifyReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{complete_graph, path_graph};

    fn ns(nodes: &[u32]) -> NodeSet {
        NodeSet::from_unsorted(nodes.to_vec())
    }

    #[test]
    fn whole_clique_is_a_valid_clustering() {
        let g = complete_graph(3);
        let report = verify_clustering(&g, &[ns(&[0, 1, 2])], &NodeSet::empty(), 0.0, 1);
        assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn adjacent_clusters_fail_clause_a() {
        let g = path_graph(4);
        let report =
            verify_clustering(&g, &[ns(&[0, 1]), ns(&[2, 3])], &NodeSet::empty(), 0.0, 1);
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.starts_with("(a)")));
    }

    #[test]
    fn separated_clusters_pass_with_gap_node() {
        let g = path_graph(5);
        let report = verify_clustering(&g, &[ns(&[0, 1]), ns(&[3, 4])], &ns(&[2]), 0.2, 1);
        assert!(report.is_valid(), "{:?}", report.violations);
        // Tighter lambda fails clause (c).
        let report = verify_clustering(&g, &[ns(&[0, 1]), ns(&[3, 4])], &ns(&[2]), 0.1, 1);
        assert!(report.violations.iter().any(|v| v.starts_with("(c)")));
    }

    #[test]
    fn lambda_boundary_is_inclusive() {
        // Exactly λ·n unclustered nodes must pass: 1 of 5 at λ = 1/5.
        let g = path_graph(5);
        let report = verify_clustering(&g, &[ns(&[0, 1]), ns(&[3, 4])], &ns(&[2]), 0.2, 1);
        assert!(report.is_valid());
    }

    #[test]
    fn weak_diameter_uses_host_distances() {
        // Cluster {0, 2} in P3 has weak diameter 2 through the middle node.
        let g = path_graph(3);
        let report = verify_clustering(&g, &[ns(&[0, 2])], &ns(&[1]), 0.5, 1);
        assert!(report.violations.iter().any(|v| v.starts_with("(b)")));
        let report = verify_clustering(&g, &[ns(&[0, 2])], &ns(&[1]), 0.5, 2);
        assert!(report.is_valid(), "{:?}", report.violations);
    }

    #[test]
    fn coverage_gaps_are_reported() {
        let g = path_graph(3);
        let report = verify_clustering(&g, &[ns(&[0])], &ns(&[2]), 1.0, 0);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("neither clustered nor unclustered")));
    }

    #[test]
    fn decomposition_checks_colors_and_adjacency() {
        let g = path_graph(4);
        // Alternating singleton clusters with two colors: valid.
        let clusters: Vec<(NodeSet, u32)> =
            (0..4).map(|u| (ns(&[u]), 1 + u % 2)).collect();
        let report = verify_decomposition(&g, &clusters, 2, 0);
        assert!(report.is_valid(), "{:?}", report.violations);
        // All same color: adjacent singletons collide.
        let clusters: Vec<(NodeSet, u32)> = (0..4).map(|u| (ns(&[u]), 1)).collect();
        let report = verify_decomposition(&g, &clusters, 2, 0);
        assert!(report.violations.iter().any(|v| v.starts_with("adjacency")));
        // Color outside the range.
        let clusters = vec![(ns(&[0, 1, 2, 3]), 3)];
        let report = verify_decomposition(&g, &clusters, 2, 3);
        assert!(report.violations.iter().any(|v| v.starts_with("colors")));
    }

    #[test]
    fn decomposition_whole_graph_single_cluster() {
        let g = path_graph(6);
        let report = verify_decomposition(&g, &[(ns(&[0, 1, 2, 3, 4, 5]), 1)], 1, 5);
        assert!(report.is_valid(), "{:?}", report.violations);
    }
}
