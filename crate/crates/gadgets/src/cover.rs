//! Subgraph covers with verifiable certificates.
//!
//! A cover splits a hard gadget into a few overlapping elements whose
//! bounded-radius neighborhoods look like pieces of an easy graph family.
//! Everything a downstream consumer relies on is recorded as an explicit
//! certificate and can be re-derived from scratch with [`verify_cover`];
//! certificates are never trusted across crate boundaries.

use analysis::exact_chromatic_number;
use graph_core::{
    bfs_distances_multi, induced_subgraph, is_isomorphic, neighborhood_of_set, Graph, NodeSet,
    DEFAULT_ISO_BUDGET, UNREACHABLE,
};
use serde::{Deserialize, Serialize};

use crate::error::GadgetError;

/// Which generator family a cover belongs to, with its parameters. Gadget
/// generators are pure functions of their parameters, so this tag is a
/// complete reference to the host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum CoverFamily {
    /// Iterated-join gadget ([`crate::rjoin_gadget`]).
    Rjoin {
        /// Building-block clique size.
        chi: u32,
        /// Half the join depth (the gadget uses `2r`-joins).
        r: u32,
        /// Number of join iterations.
        k: u32,
    },
    /// Quadrangulation-quotient gadget ([`crate::kb_gadget`]).
    Kb {
        /// Ring width.
        w: u32,
        /// Number of rows.
        h: u32,
    },
}

/// Outcome of matching an element's neighborhood against a reference patch.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PatchIso {
    /// The neighborhood is isomorphic to the reference patch; `mapping[s]`
    /// is the patch node matching dense neighborhood node `s` (dense ids
    /// enumerate the neighborhood in ascending host-id order).
    Isomorphic {
        /// Witness mapping, dense neighborhood id to reference patch id.
        mapping: Vec<u32>,
    },
    /// The neighborhood is not isomorphic to the reference patch.
    NotIsomorphic,
}

/// Facts certified about one cover element at construction time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementCertificate {
    /// Exact chromatic number of the host subgraph induced by the closed
    /// radius-`T` neighborhood of the element.
    pub local_chi: u32,
    /// Whether the element induces a connected subgraph of the host.
    pub connected: bool,
    /// The maximum-id host node at distance exactly `T` from the element
    /// (for `T = 0` this is the maximum-id element node).
    pub witness: u32,
    /// Lattice-patch families also certify that the radius-`T` neighborhood
    /// is isomorphic to a reference patch; `None` when not applicable.
    pub patch_iso: Option<PatchIso>,
}

/// A family of overlapping node sets covering a host graph, with the radius
/// `T` at which their neighborhoods were certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphCover {
    /// Host gadget reference (family plus parameters).
    #[serde(flatten)]
    pub family: CoverFamily,
    /// Certification radius.
    #[serde(rename = "T")]
    pub t: u32,
    /// Cover elements as host node sets.
    pub elements: Vec<NodeSet>,
    /// Per-element certificates, parallel to `elements`.
    pub certificates: Vec<ElementCertificate>,
}

/// Verification report for a cover: one flag per clause, plus a detail line
/// for every failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    /// Every host node belongs to at least one element.
    pub node_union: bool,
    /// Every host edge has both endpoints inside at least one element.
    pub edge_union: bool,
    /// Every host node's closed 1-ball is contained in at least one element.
    pub ball_containment: bool,
    /// Every stored certificate re-verifies from scratch.
    pub certificates: bool,
    /// Human-readable descriptions of each failed check.
    pub failures: Vec<String>,
}

impl CoverReport {
    /// Whether all four clauses hold.
    #[must_use]
    pub fn all_ok(&self) -> bool {
        self.node_union && self.edge_union && self.ball_containment && self.certificates
    }
}

/// Computes the raw certificate facts for one element. Fails only when no
/// node sits at distance exactly `t` from the element (then `t` is not a
/// meaningful certification radius for this cover).
pub(crate) fn compute_certificate(
    host: &Graph,
    element: &NodeSet,
    t: u32,
    reference: Option<&Graph>,
    budget: u64,
) -> Result<ElementCertificate, GadgetError> {
    if element.is_empty() {
        return Err(GadgetError::BadParams("cover element is empty".into()));
    }
    element.check_range(host.n())?;
    let nhood = neighborhood_of_set(host, element, t);
    let (sub, _) = induced_subgraph(host, &nhood).expect("neighborhood is in range");
    let local_chi = exact_chromatic_number(&sub, budget)?.chi;
    let connected = element_connected(host, element);
    let witness = witness_at_distance(host, element, t).ok_or_else(|| {
        GadgetError::CertificateFailed(format!("no node at distance exactly {t} from an element"))
    })?;
    let patch_iso = match reference {
        None => None,
        Some(patch) => Some(match is_isomorphic(&sub, patch, DEFAULT_ISO_BUDGET)? {
            Some(mapping) => PatchIso::Isomorphic { mapping },
            None => PatchIso::NotIsomorphic,
        }),
    };
    Ok(ElementCertificate { local_chi, connected, witness, patch_iso })
}

/// Whether `element` induces a connected subgraph of `host`.
pub(crate) fn element_connected(host: &Graph, element: &NodeSet) -> bool {
    let mut inside = vec![false; host.n()];
    for v in element.iter() {
        inside[v as usize] = true;
    }
    let Some(start) = element.iter().next() else {
        return true;
    };
    let mut seen = vec![false; host.n()];
    let mut stack = vec![start];
    seen[start as usize] = true;
    let mut reached = 0usize;
    while let Some(u) = stack.pop() {
        reached += 1;
        for &v in host.neighbors(u) {
            if inside[v as usize] && !seen[v as usize] {
                seen[v as usize] = true;
                stack.push(v);
            }
        }
    }
    reached == element.len()
}

/// The maximum-id node at distance exactly `t` from `element`, if any.
pub(crate) fn witness_at_distance(host: &Graph, element: &NodeSet, t: u32) -> Option<u32> {
    let dist = bfs_distances_multi(host, element.iter());
    (0..host.n() as u32)
        .rev()
        .find(|&v| dist[v as usize] != UNREACHABLE && dist[v as usize] == t)
}

/// Re-derives every cover clause from scratch against `host`.
///
/// The four clauses are: the elements' node sets union to `V(host)`; their
/// induced edges union to `E(host)`; every node's closed 1-ball sits inside
/// some element; and every stored per-element certificate (neighborhood
/// chromatic number = `expected_local_chi`, connectivity, distance-`T`
/// witness, patch isomorphism where present) checks out when recomputed.
pub fn verify_cover(
    host: &Graph,
    cover: &SubgraphCover,
    expected_local_chi: u32,
    budget: u64,
) -> Result<CoverReport, GadgetError> {
    if cover.elements.len() != cover.certificates.len() {
        return Err(GadgetError::BadParams(
            "cover has mismatched element and certificate counts".into(),
        ));
    }
    if cover.elements.is_empty() {
        return Err(GadgetError::BadParams("cover has no elements".into()));
    }
    for e in &cover.elements {
        e.check_range(host.n())?;
    }
    let mut failures = Vec::new();

    let membership: Vec<Vec<bool>> = cover
        .elements
        .iter()
        .map(|e| {
            let mut inside = vec![false; host.n()];
            for v in e.iter() {
                inside[v as usize] = true;
            }
            inside
        })
        .collect();

    let mut node_union = true;
    for v in 0..host.n() {
        if !membership.iter().any(|m| m[v]) {
            node_union = false;
            failures.push(format!("node {v} is in no element"));
        }
    }

    let mut edge_union = true;
    for (u, v) in host.edges() {
        if !membership.iter().any(|m| m[u as usize] && m[v as usize]) {
            edge_union = false;
            failures.push(format!("edge {{{u},{v}}} is inside no element"));
        }
    }

    let mut ball_containment = true;
    for u in host.nodes() {
        let contained = membership.iter().any(|m| {
            m[u as usize] && host.neighbors(u).iter().all(|&v| m[v as usize])
        });
        if !contained {
            ball_containment = false;
            failures.push(format!("closed 1-ball of node {u} fits in no element"));
        }
    }

    let reference = cover.reference_patch();
    let mut certificates = true;
    for (idx, (element, stored)) in cover.elements.iter().zip(&cover.certificates).enumerate() {
        match compute_certificate(host, element, cover.t, reference.as_ref(), budget) {
            Ok(fresh) => {
                if fresh.local_chi != stored.local_chi {
                    certificates = false;
                    failures.push(format!(
                        "element {idx}: stored neighborhood chi {} but recomputed {}",
                        stored.local_chi, fresh.local_chi
                    ));
                }
                if fresh.local_chi != expected_local_chi {
                    certificates = false;
                    failures.push(format!(
                        "element {idx}: neighborhood chi is {} but {} was expected",
                        fresh.local_chi, expected_local_chi
                    ));
                }
                if !fresh.connected || !stored.connected {
                    certificates = false;
                    failures.push(format!("element {idx}: not connected"));
                }
                if fresh.witness != stored.witness {
                    certificates = false;
                    failures.push(format!(
                        "element {idx}: stored witness {} but recomputed {}",
                        stored.witness, fresh.witness
                    ));
                }
                match (&fresh.patch_iso, &stored.patch_iso) {
                    (None, None) => {}
                    (Some(PatchIso::Isomorphic { .. }), Some(PatchIso::Isomorphic { .. })) => {}
                    (Some(PatchIso::NotIsomorphic), _) | (_, Some(PatchIso::NotIsomorphic)) => {
                        certificates = false;
                        failures.push(format!(
                            "element {idx}: neighborhood is not isomorphic to the reference patch"
                        ));
                    }
                    _ => {
                        certificates = false;
                        failures.push(format!(
                            "element {idx}: stored and recomputed patch matches disagree"
                        ));
                    }
                }
            }
            Err(e) => {
                certificates = false;
                failures.push(format!("element {idx}: {e}"));
            }
        }
    }

    Ok(CoverReport { node_union, edge_union, ball_containment, certificates, failures })
}

impl SubgraphCover {
    /// The reference lattice patch this cover's neighborhoods are matched
    /// against, when the family defines one.
    #[must_use]
    pub fn reference_patch(&self) -> Option<Graph> {
        match self.family {
            CoverFamily::Rjoin { .. } => None,
            CoverFamily::Kb { w, h } => {
                Some(lattice_patch((w + 5) / 2, (h + 5) / 2, self.t).0)
            }
        }
    }

    /// The chromatic number each element neighborhood is expected to have.
    #[must_use]
    pub fn expected_local_chi(&self) -> u32 {
        match self.family {
            CoverFamily::Rjoin { chi, .. } => chi,
            CoverFamily::Kb { .. } => 2,
        }
    }
}

/// The radius-`t` neighborhood, in the infinite two-dimensional lattice, of
/// a `core_w x core_h` rectangle. Returns the patch graph together with the
/// lattice coordinates of each node (ids enumerate coordinates in ascending
/// `(x, y)` order; the rectangle occupies `[0, core_w) x [0, core_h)`).
#[must_use]
pub fn lattice_patch(core_w: u32, core_h: u32, t: u32) -> (Graph, Vec<(i64, i64)>) {
    assert!(core_w > 0 && core_h > 0, "patch core must be nonempty");
    let (core_w, core_h, t) = (i64::from(core_w), i64::from(core_h), i64::from(t));
    let deficit = |z: i64, len: i64| {
        if z < 0 {
            -z
        } else if z >= len {
            z - len + 1
        } else {
            0
        }
    };
    let mut coords = Vec::new();
    for x in -t..core_w + t {
        for y in -t..core_h + t {
            if deficit(x, core_w) + deficit(y, core_h) <= t {
                coords.push((x, y));
            }
        }
    }
    let index: std::collections::HashMap<(i64, i64), u32> =
        coords.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect();
    let mut edges = Vec::new();
    for (i, &(x, y)) in coords.iter().enumerate() {
        for (nx, ny) in [(x + 1, y), (x, y + 1)] {
            if let Some(&j) = index.get(&(nx, ny)) {
                edges.push((i as u32, j));
            }
        }
    }
    let graph = Graph::build(coords.len(), edges).expect("patch edges are valid");
    (graph, coords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use analysis::DEFAULT_SOLVER_BUDGET;
    use graph_core::{cycle_graph, grid_graph, path_graph};

    #[test]
    fn lattice_patch_radius_zero_is_the_rectangle() {
        let (patch, coords) = lattice_patch(3, 4, 0);
        assert_eq!(patch.n(), 12);
        assert_eq!(patch.m(), 2 * 3 * 4 - 3 - 4);
        assert!(is_isomorphic(&patch, &grid_graph(3, 4), DEFAULT_ISO_BUDGET)
            .unwrap()
            .is_some());
        assert_eq!(coords.len(), 12);
        assert!(coords.contains(&(0, 0)) && coords.contains(&(2, 3)));
    }

    #[test]
    fn lattice_patch_grows_with_beveled_corners() {
        // 3x3 core, radius 1: 9 + 4*3 = 21 nodes (no diagonal corners).
        let (patch, coords) = lattice_patch(3, 3, 1);
        assert_eq!(patch.n(), 21);
        assert!(coords.contains(&(-1, 0)) && !coords.contains(&(-1, -1)));
        // Radius 2 additionally bevels: 9 + 2*2*(3+3) + 4*1 = 37.
        let (patch2, _) = lattice_patch(3, 3, 2);
        assert_eq!(patch2.n(), 37);
    }

    #[test]
    fn whole_graph_cover_at_radius_zero_verifies() {
        let g = cycle_graph(6);
        let all: NodeSet = (0..6u32).collect();
        let cert =
            compute_certificate(&g, &all, 0, None, DEFAULT_SOLVER_BUDGET).unwrap();
        assert_eq!(cert.local_chi, 2);
        assert!(cert.connected);
        assert_eq!(cert.witness, 5, "max-id convention for radius-0 witnesses");
        let cover = SubgraphCover {
            family: CoverFamily::Rjoin { chi: 2, r: 3, k: 1 },
            t: 0,
            elements: vec![all],
            certificates: vec![cert],
        };
        let report = verify_cover(&g, &cover, 2, DEFAULT_SOLVER_BUDGET).unwrap();
        assert!(report.all_ok(), "failures: {:?}", report.failures);
    }

    #[test]
    fn deleting_a_node_fails_the_union_clause() {
        let g = cycle_graph(6);
        let partial: NodeSet = (0..5u32).collect();
        let cert =
            compute_certificate(&g, &partial, 0, None, DEFAULT_SOLVER_BUDGET).unwrap();
        let cover = SubgraphCover {
            family: CoverFamily::Rjoin { chi: 2, r: 3, k: 1 },
            t: 0,
            elements: vec![partial],
            certificates: vec![cert],
        };
        let report = verify_cover(&g, &cover, 2, DEFAULT_SOLVER_BUDGET).unwrap();
        assert!(!report.node_union);
        assert!(!report.edge_union, "the two edges at node 5 are uncovered");
        assert!(!report.all_ok());
    }

    #[test]
    fn witness_distance_is_exact() {
        let g = path_graph(6);
        let left: NodeSet = (0..2u32).collect();
        assert_eq!(witness_at_distance(&g, &left, 2), Some(3));
        assert_eq!(witness_at_distance(&g, &left, 3), Some(4));
        assert_eq!(witness_at_distance(&g, &left, 10), None);
    }

    #[test]
    fn disconnected_element_is_reported() {
        let g = path_graph(5);
        let split: NodeSet = [0u32, 4].into_iter().collect();
        assert!(!element_connected(&g, &split));
        let joined: NodeSet = (0..5u32).collect();
        assert!(element_connected(&g, &joined));
    }
}
