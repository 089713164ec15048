//! The hiding trick: color a cluster together with its boundary, then
//! withdraw the top color class from the boundary so that the withdrawn
//! ("hidden") color never faces the rest of the graph across an edge.

use analysis::{exact_chromatic_number, Color, DEFAULT_SOLVER_BUDGET};
use graph_core::{induced_subgraph, neighborhood_of_set, Graph, NodeSet};
use serde::{Deserialize, Serialize};

use crate::error::ColoringError;

/// Outcome of coloring one cluster: the extended set that actually received
/// colors and the partial coloring over it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HidingRecord {
    /// The cluster that had to be colored completely.
    pub a: NodeSet,
    /// The extended set that received colors: `a ⊆ a_prime ⊆ a ∪ N(a)`.
    pub a_prime: NodeSet,
    /// Partial coloring of `a_prime`, ascending by node id. Values are
    /// [`Color::Hidden`] or a palette index [`Color::Int`] in
    /// `1..chi_loc`.
    pub phi: Vec<(u32, Color)>,
    /// Exact chromatic number of the ball `g[a ∪ N(a)]` the record used.
    pub chi_loc: u32,
}

impl HidingRecord {
    /// The color of `node` under φ, if assigned.
    #[must_use]
    pub fn color_of(&self, node: u32) -> Option<Color> {
        self.phi
            .binary_search_by_key(&node, |&(v, _)| v)
            .ok()
            .map(|i| self.phi[i].1)
    }
}

/// Completely colors `a` while keeping one color invisible to the outside.
///
/// Colors the ball `B = a ∪ N(a)` with an exact minimal coloring, declares
/// the top color class hidden, and drops every boundary node (`B ∖ a`) that
/// landed in the hidden class. The returned record satisfies, by
/// construction:
///
/// 1. `a ⊆ a_prime ⊆ a ∪ N(a)`;
/// 2. φ is proper on `g[a_prime]`;
/// 3. no node outside `a_prime` is adjacent in `g` to a hidden node of
///    `a_prime` (hidden nodes all lie in `a`, whose neighbors are all in
///    `B`, and any of them sharing the hidden class was dropped).
pub fn hide_coloring(g: &Graph, a: &NodeSet) -> Result<HidingRecord, ColoringError> {
    if a.is_empty() {
        return Err(ColoringError::BadParams(
            "hiding requires a nonempty cluster".into(),
        ));
    }
    a.check_range(g.n())
        .map_err(|e| ColoringError::BadParams(e.to_string()))?;
    let ball = neighborhood_of_set(g, a, 1);
    let (sub, map) = induced_subgraph(g, &ball).expect("ball is within range");
    let cert = exact_chromatic_number(&sub, DEFAULT_SOLVER_BUDGET)?;
    let chi_loc = cert.chi;
    let mut phi = Vec::with_capacity(ball.len());
    let mut kept = Vec::with_capacity(ball.len());
    for node in ball.iter() {
        let sub_id = map.to_sub(node).expect("ball nodes are in the subgraph");
        let psi = cert.coloring[sub_id as usize];
        if psi == chi_loc {
            if !a.contains(node) {
                continue; // boundary node in the hidden class: withdrawn
            }
            phi.push((node, Color::Hidden));
        } else {
            phi.push((node, Color::Int(psi)));
        }
        kept.push(node);
    }
    Ok(HidingRecord {
        a: a.clone(),
        a_prime: NodeSet::from_unsorted(kept),
        phi,
        chi_loc,
    })
}
