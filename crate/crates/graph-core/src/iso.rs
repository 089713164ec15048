//! Graph isomorphism testing with an explicit witness.
//!
//! Strategy: joint iterated color refinement (degree-based, then
//! neighborhood-multiset signatures) to partition both graphs into
//! compatible color classes, followed by backtracking search that maps
//! nodes class-by-class with adjacency consistency checks. The search
//! charges one unit of budget per attempted node assignment and aborts
//! with [`GraphError::TooLarge`] when the budget is exhausted.

use std::collections::HashMap;

use crate::graph::{Graph, GraphError};

/// Default expansion budget for isomorphism searches.
pub const DEFAULT_ISO_BUDGET: u64 = 10_000_000;

/// Tests whether `g` and `h` are isomorphic.
///
/// Returns `Ok(Some(map))` with `map[u] = image of u in h` if they are,
/// `Ok(None)` if they are not, and [`GraphError::TooLarge`] if the search
/// exceeded `budget` attempted assignments before deciding.
pub fn is_isomorphic(g: &Graph, h: &Graph, budget: u64) -> Result<Option<Vec<u32>>, GraphError> {
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(None);
    }
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let (gcol, hcol) = match joint_refinement(g, h) {
        Some(pair) => pair,
        None => return Ok(None),
    };
    let mut search = Search::new(g, h, &gcol, &hcol, budget);
    let order = search.placement_order();
    if search.place(&order, 0)? {
        let map = search.map.iter().map(|x| x.unwrap()).collect();
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

/// Runs iterated refinement on both graphs with a shared signature table so
/// color ids are comparable across graphs. Returns `None` when the color
/// class sizes differ (certain non-isomorphism).
fn joint_refinement(g: &Graph, h: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut gcol: Vec<u32> = vec![0; g.n()];
    let mut hcol: Vec<u32> = vec![0; h.n()];
    let mut classes = 1usize;
    loop {
        let mut table: HashMap<(u32, Vec<u32>), u32> = HashMap::new();
        let refine = |graph: &Graph, cols: &[u32], table: &mut HashMap<(u32, Vec<u32>), u32>| {
            let mut next = Vec::with_capacity(graph.n());
            for v in graph.nodes() {
                let mut sig: Vec<u32> =
                    graph.neighbors(v).iter().map(|&w| cols[w as usize]).collect();
                sig.sort_unstable();
                let id = table.len() as u32;
                next.push(*table.entry((cols[v as usize], sig)).or_insert(id));
            }
            next
        };
        let gnext = refine(g, &gcol, &mut table);
        let hnext = refine(h, &hcol, &mut table);
        if !class_sizes_match(&gnext, &hnext, table.len()) {
            return None;
        }
        let stable = table.len() == classes;
        gcol = gnext;
        hcol = hnext;
        if stable {
            return Some((gcol, hcol));
        }
        classes = table.len();
    }
}

fn class_sizes_match(gcol: &[u32], hcol: &[u32], classes: usize) -> bool {
    let mut counts = vec![0i64; classes];
    for &c in gcol {
        counts[c as usize] += 1;
    }
    for &c in hcol {
        counts[c as usize] -= 1;
    }
    counts.iter().all(|&c| c == 0)
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    gcol: &'a [u32],
    hcol: &'a [u32],
    /// h-nodes grouped by color.
    h_by_color: HashMap<u32, Vec<u32>>,
    map: Vec<Option<u32>>,
    used: Vec<bool>,
    budget: u64,
    expansions: u64,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, h: &'a Graph, gcol: &'a [u32], hcol: &'a [u32], budget: u64) -> Self {
        let mut h_by_color: HashMap<u32, Vec<u32>> = HashMap::new();
        for v in h.nodes() {
            h_by_color.entry(hcol[v as usize]).or_default().push(v);
        }
        Self {
            g,
            h,
            gcol,
            hcol,
            h_by_color,
            map: vec![None; g.n()],
            used: vec![false; h.n()],
            budget,
            expansions: 0,
        }
    }

    /// Static placement order: greedily pick the node with the most already
    /// ordered neighbors, breaking ties by smaller color class then id. This
    /// keeps the search connected so adjacency constraints bite early.
    fn placement_order(&self) -> Vec<u32> {
        let n = self.g.n();
        let mut class_size: HashMap<u32, usize> = HashMap::new();
        for &c in self.gcol {
            *class_size.entry(c).or_insert(0) += 1;
        }
        let mut placed_neighbors = vec![0usize; n];
        let mut ordered = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n as u32)
                .filter(|&v| !ordered[v as usize])
                .max_by(|&a, &b| {
                    let key = |v: u32| {
                        (
                            placed_neighbors[v as usize],
                            std::cmp::Reverse(class_size[&self.gcol[v as usize]]),
                            std::cmp::Reverse(v),
                        )
                    };
                    key(a).cmp(&key(b))
                })
                .unwrap();
            ordered[v as usize] = true;
            order.push(v);
            for &w in self.g.neighbors(v) {
                placed_neighbors[w as usize] += 1;
            }
        }
        order
    }

    fn place(&mut self, order: &[u32], idx: usize) -> Result<bool, GraphError> {
        if idx == order.len() {
            return Ok(true);
        }
        let u = order[idx];
        let candidates = self.h_by_color[&self.gcol[u as usize]].clone();
        for w in candidates {
            if self.used[w as usize] {
                continue;
            }
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(GraphError::TooLarge { budget: self.budget });
            }
            if !self.consistent(u, w) {
                continue;
            }
            self.map[u as usize] = Some(w);
            self.used[w as usize] = true;
            if self.place(order, idx + 1)? {
                return Ok(true);
            }
            self.map[u as usize] = None;
            self.used[w as usize] = false;
        }
        Ok(false)
    }

    /// Candidate check: every placed g-neighbor of `u` must map to an
    /// h-neighbor of `w`, and `w` must have exactly that many used
    /// h-neighbors (so no placed non-neighbor hits a neighbor of `w`).
    fn consistent(&self, u: u32, w: u32) -> bool {
        debug_assert_eq!(self.gcol[u as usize], self.hcol[w as usize]);
        let mut placed = 0;
        for &v in self.g.neighbors(u) {
            if let Some(img) = self.map[v as usize] {
                if !self.h.has_edge(img, w) {
                    return false;
                }
                placed += 1;
            }
        }
        let used_h = self.h.neighbors(w).iter().filter(|&&x| self.used[x as usize]).count();
        placed == used_h
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{complete_graph, cycle_graph, path_graph};
    use crate::graph::Graph;
    use crate::ops::tensor_product;

    fn check(g: &Graph, h: &Graph, map: &[u32]) {
        assert_eq!(map.len(), g.n());
        let mut seen = vec![false; h.n()];
        for &w in map {
            assert!(!seen[w as usize]);
            seen[w as usize] = true;
        }
        for u in g.nodes() {
            for v in g.nodes() {
                if u < v {
                    assert_eq!(
                        g.has_edge(u, v),
                        h.has_edge(map[u as usize], map[v as usize]),
                        "edge mismatch at ({u}, {v})"
                    );
                }
            }
        }
    }

    #[test]
    fn identical_graphs_isomorphic() {
        let g = cycle_graph(6);
        let map = is_isomorphic(&g, &g, 1_000_000).unwrap().unwrap();
        check(&g, &g, &map);
    }

    #[test]
    fn relabeled_cycle_isomorphic() {
        let g = cycle_graph(6);
        // C6 with nodes shuffled: 0-2, 2-4, 4-1, 1-3, 3-5, 5-0.
        let h = Graph::build(6, [(0, 2), (2, 4), (1, 4), (1, 3), (3, 5), (0, 5)]).unwrap();
        let map = is_isomorphic(&g, &h, 1_000_000).unwrap().unwrap();
        check(&g, &h, &map);
    }

    // Frozen oracle: K2 x K3 is isomorphic to C6.
    #[test]
    fn tensor_k2_k3_isomorphic_to_c6() {
        let t = tensor_product(&complete_graph(2), &complete_graph(3));
        let map = is_isomorphic(&t, &cycle_graph(6), 1_000_000).unwrap().unwrap();
        check(&t, &cycle_graph(6), &map);
    }

    #[test]
    fn non_isomorphic_same_degree_sequence() {
        // C6 vs two triangles: both 2-regular on 6 nodes.
        let c6 = cycle_graph(6);
        let two_triangles =
            Graph::build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(is_isomorphic(&c6, &two_triangles, 1_000_000).unwrap(), None);
    }

    #[test]
    fn different_sizes_not_isomorphic() {
        assert_eq!(is_isomorphic(&path_graph(3), &path_graph(4), 1_000).unwrap(), None);
        assert_eq!(is_isomorphic(&cycle_graph(5), &path_graph(5), 1_000).unwrap(), None);
    }

    #[test]
    fn budget_exhaustion_reports_too_large() {
        // Two large random-ish regular graphs force at least a few expansions;
        // a budget of 0 must trip immediately on any search that reaches
        // placement.
        let g = cycle_graph(8);
        assert_eq!(
            is_isomorphic(&g, &g, 0).unwrap_err(),
            GraphError::TooLarge { budget: 0 }
        );
    }

    #[test]
    fn empty_graphs_isomorphic() {
        let g = Graph::build(0, []).unwrap();
        assert_eq!(is_isomorphic(&g, &g, 10).unwrap(), Some(vec![]));
    }
}
