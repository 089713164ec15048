//! Round accounting for macro-operations.
//!
//! The coloring pipeline runs centrally but bills every distributed step
//! to a [`RoundLedger`] under the standard accounting rules: gathering or
//! broadcasting within a cluster costs the maximum leader distance over
//! the cluster and its neighborhood, and simulating one round of a power
//! graph costs the exponent in host rounds.

use graph_core::{bfs_distances, neighborhood_of_set, Graph, NodeSet, UNREACHABLE};
use serde::{Deserialize, Serialize};

use crate::error::SimError;

/// Monotone per-phase round counter. The total is the sum of the phases by
/// construction.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundLedger {
    phases: Vec<(String, u64)>,
}

impl RoundLedger {
    #[must_use]
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `rounds` to `phase`, creating the phase on first use.
    pub fn charge(&mut self, phase: &str, rounds: u64) {
        match self.phases.iter_mut().find(|(name, _)| name == phase) {
            Some((_, total)) => *total += rounds,
            None => self.phases.push((phase.to_string(), rounds)),
        }
    }

    /// Total rounds across all phases.
    #[must_use]
    pub fn total(&self) -> u64 {
        self.phases.iter().map(|(_, r)| r).sum()
    }

    /// Rounds charged to one phase so far.
    #[must_use]
    pub fn phase(&self, name: &str) -> u64 {
        self.phases
            .iter()
            .find(|(n, _)| n == name)
            .map_or(0, |(_, r)| *r)
    }

    /// Phases in first-charge order.
    pub fn phases(&self) -> impl Iterator<Item = (&str, u64)> {
        self.phases.iter().map(|(n, r)| (n.as_str(), *r))
    }

    /// Folds another ledger into this one, phase by phase.
    pub fn absorb(&mut self, other: &RoundLedger) {
        for (name, rounds) in other.phases() {
            self.charge(name, rounds);
        }
    }
}

/// Rounds to gather a set into its leader: the maximum distance from
/// `leader` to any node of `set` or its one-hop neighborhood.
pub fn charge_gather(g: &Graph, set: &NodeSet, leader: u32) -> Result<u64, SimError> {
    furthest(g, set, leader)
}

/// Rounds to broadcast from the leader back out: same distance bound as
/// the gather.
pub fn charge_broadcast(g: &Graph, set: &NodeSet, leader: u32) -> Result<u64, SimError> {
    furthest(g, set, leader)
}

/// Rounds to simulate `base_rounds` rounds of the k-th power graph on the
/// host graph: one power round costs k host rounds.
#[must_use]
pub fn charge_power_simulation(base_rounds: u64, k: u32) -> u64 {
    base_rounds * u64::from(k)
}

fn furthest(g: &Graph, set: &NodeSet, leader: u32) -> Result<u64, SimError> {
    let with_boundary = neighborhood_of_set(g, set, 1);
    let dist = bfs_distances(g, leader);
    let mut max = 0u64;
    for node in with_boundary.iter() {
        let d = dist[node as usize];
        if d == UNREACHABLE {
            return Err(SimError::Unreachable { leader, node });
        }
        max = max.max(u64::from(d));
    }
    Ok(max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{cycle_graph, path_graph};

    #[test]
    fn totals_equal_phase_sums() {
        let mut ledger = RoundLedger::new();
        assert_eq!(ledger.total(), 0);
        ledger.charge("election", 3);
        ledger.charge("gather", 5);
        ledger.charge("election", 2);
        assert_eq!(ledger.total(), 10);
        assert_eq!(ledger.phase("election"), 5);
        assert_eq!(ledger.phase("gather"), 5);
        assert_eq!(ledger.phase("missing"), 0);
        assert_eq!(ledger.phases().count(), 2);
    }

    #[test]
    fn absorb_merges_by_phase() {
        let mut a = RoundLedger::new();
        a.charge("x", 1);
        let mut b = RoundLedger::new();
        b.charge("x", 2);
        b.charge("y", 3);
        a.absorb(&b);
        assert_eq!(a.phase("x"), 3);
        assert_eq!(a.total(), 6);
    }

    #[test]
    fn gather_includes_the_boundary() {
        // Cluster {1, 2, 3, 4, 5} on P8 with leader 1: weak diameter 4,
        // furthest boundary node is 6 at distance 5.
        let g = path_graph(8);
        let set = NodeSet::from_unsorted(vec![1, 2, 3, 4, 5]);
        assert_eq!(charge_gather(&g, &set, 1).unwrap(), 5);
        assert_eq!(charge_broadcast(&g, &set, 1).unwrap(), 5);
    }

    #[test]
    fn gather_on_cycle_wraps_both_ways() {
        let g = cycle_graph(6);
        let set = NodeSet::from_unsorted(vec![0, 1, 5]);
        // Boundary adds 2 and 4; distances from 0: node 2 -> 2, node 4 -> 2.
        assert_eq!(charge_gather(&g, &set, 0).unwrap(), 2);
    }

    #[test]
    fn power_simulation_is_multiplicative() {
        assert_eq!(charge_power_simulation(5, 3), 15);
        assert_eq!(charge_power_simulation(0, 7), 0);
        assert_eq!(charge_power_simulation(4, 1), 4);
    }

    #[test]
    fn unreachable_boundary_is_an_error() {
        let g = graph_core::Graph::build(4, [(0, 1), (2, 3)]).unwrap();
        let set = NodeSet::from_unsorted(vec![2]);
        assert!(matches!(
            charge_gather(&g, &set, 0),
            Err(SimError::Unreachable { .. })
        ));
    }

    #[test]
    fn ledger_serializes_round_trip() {
        let mut ledger = RoundLedger::new();
        ledger.charge("gather", 7);
        let json = serde_json::to_string(&ledger).unwrap();
        let back: RoundLedger = serde_json::from_str(&json).unwrap();
        assert_eq!(back, ledger);
    }
}
