//! Local chromatic number: the largest chromatic number over all induced
//! balls of a fixed radius. This is what a radius-r view can certify about
//! the whole graph, so it measures how well a construction hides its true
//! chromatic number from bounded-radius observers.

use graph_core::{ball, induced_subgraph, Graph};

use crate::chromatic::exact_chromatic_number;
use crate::error::AnalysisError;

/// Maximum over all nodes v of χ(g[B_r(v)]), together with the smallest
/// node id attaining it.
pub fn local_chromatic_number(
    g: &Graph,
    r: u32,
    budget: u64,
) -> Result<(u32, u32), AnalysisError> {
    if g.n() == 0 {
        return Err(AnalysisError::EmptyGraph);
    }
    let mut best = 0u32;
    let mut witness = 0u32;
    for v in g.nodes() {
        let b = ball(g, v, r);
        let (sub, _) = induced_subgraph(g, &b).expect("ball nodes are in range");
        let chi = exact_chromatic_number(&sub, budget)?.chi;
        if chi > best {
            best = chi;
            witness = v;
        }
    }
    Ok((best, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::{complete_graph, cycle_graph, grid_graph, Graph};

    use crate::chromatic::DEFAULT_SOLVER_BUDGET;

    fn lcn(g: &Graph, r: u32) -> (u32, u32) {
        local_chromatic_number(g, r, DEFAULT_SOLVER_BUDGET).unwrap()
    }

    #[test]
    fn radius_zero_sees_single_nodes() {
        assert_eq!(lcn(&cycle_graph(5), 0), (1, 0));
    }

    #[test]
    fn long_odd_cycle_hides_third_color_from_small_radius() {
        // Balls of radius r in C_n (2r + 1 < n) are paths: 2-colorable.
        let g = cycle_graph(11);
        assert_eq!(lcn(&g, 1).0, 2);
        assert_eq!(lcn(&g, 4).0, 2);
        // Radius 5 sees the whole odd cycle from every node.
        assert_eq!(lcn(&g, 5).0, 3);
    }

    #[test]
    fn complete_graph_is_fully_visible_at_radius_one() {
        assert_eq!(lcn(&complete_graph(6), 1), (6, 0));
    }

    #[test]
    fn monotone_in_radius_and_bounded_by_chi() {
        let g = grid_graph(4, 5);
        let mut prev = 0;
        for r in 0..6 {
            let (v, _) = lcn(&g, r);
            assert!(v >= prev);
            assert!(v <= 2);
            prev = v;
        }
    }

    #[test]
    fn witness_is_lowest_id_on_ties() {
        // Two disjoint triangles: every node attains the max; node 0 wins.
        let g = Graph::build(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(lcn(&g, 1), (3, 0));
    }
}
