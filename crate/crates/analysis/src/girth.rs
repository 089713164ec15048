//! Exact girth computation.

use std::collections::VecDeque;

use graph_core::Graph;
use serde::{Deserialize, Serialize};

/// The length of a shortest cycle, or `Infinite` for forests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Girth {
    Finite(u32),
    Infinite,
}

/// Exact girth via one truncated BFS per root: any non-tree edge seen from
/// root `r` closes a cycle of length `dist[u] + dist[v] + 1`; the candidate
/// can overshoot for a single root (when the two paths share a prefix), but
/// the minimum over all roots is exact, because a shortest cycle is seen
/// without prefix-sharing from any of its own nodes.
#[must_use]
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best: u32 = u32::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![u32::MAX; n];
    for root in 0..n as u32 {
        if best == 3 {
            break; // a triangle is the global minimum
        }
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[root as usize] = 0;
        parent[root as usize] = u32::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if 2 * du >= best {
                break; // deeper levels cannot improve on `best`
            }
            for &v in g.neighbors(u) {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = du + 1;
                    parent[v as usize] = u;
                    queue.push_back(v);
                } else if parent[u as usize] != v && parent[v as usize] != u {
                    // Non-tree edge: cycle through root (or shorter elsewhere).
                    best = best.min(du + dist[v as usize] + 1);
                }
            }
        }
    }
    if best == u32::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{complete_graph, cycle_graph, grid_graph, path_graph, Graph};

    #[test]
    fn cycles_and_trees() {
        assert_eq!(girth(&cycle_graph(6)), Girth::Finite(6));
        assert_eq!(girth(&cycle_graph(3)), Girth::Finite(3));
        assert_eq!(girth(&path_graph(7)), Girth::Infinite);
        assert_eq!(girth(&complete_graph(5)), Girth::Finite(3));
        assert_eq!(girth(&grid_graph(4, 4)), Girth::Finite(4));
        assert_eq!(girth(&Graph::build(1, []).unwrap()), Girth::Infinite);
    }

    #[test]
    fn two_cycles_takes_shorter() {
        // C3 and C5 sharing no nodes.
        let g = Graph::build(
            8,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (3, 7)],
        )
        .unwrap();
        assert_eq!(girth(&g), Girth::Finite(3));
    }

    /// Oracle: girth = 3 iff a triangle exists (triple enumeration).
    #[test]
    fn triangle_iff_girth_three() {
        let graphs = [
            complete_graph(4),
            cycle_graph(5),
            grid_graph(3, 3),
            Graph::build(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
        ];
        for g in &graphs {
            let mut has_triangle = false;
            for u in 0..g.n() as u32 {
                for v in (u + 1)..g.n() as u32 {
                    for w in (v + 1)..g.n() as u32 {
                        if g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w) {
                            has_triangle = true;
                        }
                    }
                }
            }
            assert_eq!(girth(g) == Girth::Finite(3), has_triangle);
        }
    }
}
