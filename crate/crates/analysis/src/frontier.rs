//! Bounded-frontier exact decider.
//!
//! Processes nodes in id order. After placing node `i`, the only colors
//! that can still matter are those of the *boundary*: placed nodes with at
//! least one neighbor above `i`. When the maximum boundary width stays
//! small, dynamic programming over boundary colorings decides
//! k-colorability exactly — layered join constructions order their ids so
//! the boundary is a couple of adjacent levels.
//!
//! States are deduplicated boundary colorings; parent pointers (previous
//! state index plus the color given to the node placed at that step) make
//! witness reconstruction a single backward walk.

use std::collections::HashMap;

use graph_core::Graph;

/// Maximum admissible boundary width.
const WIDTH_CAP: usize = 28;
/// Cap on the total number of states kept across all steps.
const TOTAL_STATE_CAP: usize = 2_000_000;

/// Attempts to decide k-colorability by frontier DP. `None` when the
/// boundary gets wider than [`WIDTH_CAP`] or the state total exceeds
/// [`TOTAL_STATE_CAP`]; the caller falls through to branch-and-bound.
pub(crate) fn try_decide(g: &Graph, k: u32) -> Option<Option<Vec<u32>>> {
    let n = g.n();
    debug_assert!(n > 0 && (3..64).contains(&k));
    // leave_at[u]: the step after which u exits the boundary: the largest
    // neighbor if that lies above u, otherwise u's own step.
    let leave_at: Vec<u32> = (0..n as u32)
        .map(|u| g.neighbors(u).last().copied().unwrap_or(0).max(u))
        .collect();
    let mut leavers: Vec<Vec<u32>> = vec![Vec::new(); n];
    for u in 0..n as u32 {
        leavers[leave_at[u as usize] as usize].push(u);
    }
    // Width precheck before any state is allocated.
    let mut width = 0usize;
    for i in 0..n {
        width += 1;
        if width > WIDTH_CAP {
            return None;
        }
        width -= leavers[i].len();
    }
    // The DP. boundary: sorted ids whose colors the current states hold.
    let mut boundary: Vec<u32> = Vec::new();
    let mut states: Vec<Vec<u8>> = vec![Vec::new()];
    let mut parents: Vec<Vec<(u32, u8)>> = Vec::with_capacity(n);
    let mut total_states = 1usize;
    for i in 0..n as u32 {
        // Positions (in the current boundary) of i's already-placed
        // neighbors; all of them are still in the boundary because their
        // leave_at is at least i.
        let placed: Vec<usize> = g
            .neighbors(i)
            .iter()
            .take_while(|&&v| v < i)
            .map(|&v| {
                boundary
                    .binary_search(&v)
                    .expect("placed neighbor must still be in the boundary")
            })
            .collect();
        // The next boundary: current one plus i, minus this step's leavers.
        boundary.push(i);
        let keep: Vec<usize> = boundary
            .iter()
            .enumerate()
            .filter(|&(_, u)| !leavers[i as usize].contains(u))
            .map(|(pos, _)| pos)
            .collect();
        let mut dedup: HashMap<Vec<u8>, u32> = HashMap::new();
        let mut next_states: Vec<Vec<u8>> = Vec::new();
        let mut step_parents: Vec<(u32, u8)> = Vec::new();
        for (si, st) in states.iter().enumerate() {
            let mut used = 0u64;
            for &pos in &placed {
                used |= 1 << st[pos];
            }
            let mut avail = !used & ((1u64 << k) - 1);
            while avail != 0 {
                let c = avail.trailing_zeros() as u8;
                avail &= avail - 1;
                let mut full = st.clone();
                full.push(c);
                let key: Vec<u8> = keep.iter().map(|&pos| full[pos]).collect();
                if let std::collections::hash_map::Entry::Vacant(e) = dedup.entry(key) {
                    next_states.push(e.key().clone());
                    e.insert(step_parents.len() as u32);
                    step_parents.push((si as u32, c));
                }
            }
        }
        total_states += next_states.len();
        if total_states > TOTAL_STATE_CAP {
            return None;
        }
        if next_states.is_empty() {
            return Some(None); // no proper coloring extends to node i
        }
        boundary = keep.iter().map(|&pos| boundary[pos]).collect();
        states = next_states;
        parents.push(step_parents);
    }
    // Reconstruct from any final state.
    let mut colors = vec![0u32; n];
    let mut idx = 0usize;
    for i in (0..n).rev() {
        let (prev, c) = parents[i][idx];
        colors[i] = c as u32;
        idx = prev as usize;
    }
    Some(Some(colors))
}
