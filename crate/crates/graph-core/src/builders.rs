//! Standard graph families and seeded random generators.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::ops::connected_components;

/// The edgeless graph on `n` nodes.
#[must_use]
pub fn empty_graph(n: usize) -> Graph {
    Graph::build(n, std::iter::empty()).unwrap()
}

/// The path `0 - 1 - ... - (n-1)`.
#[must_use]
pub fn path_graph(n: usize) -> Graph {
    let edges = (0..n.saturating_sub(1) as u32).map(|i| (i, i + 1));
    Graph::build(n, edges).unwrap()
}

/// The cycle on `n >= 3` nodes.
#[must_use]
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle requires at least 3 nodes");
    let edges = (0..n as u32).map(|i| {
        let j = (i + 1) % n as u32;
        (i.min(j), i.max(j))
    });
    Graph::build(n, edges).unwrap()
}

/// The complete graph on `n` nodes.
#[must_use]
pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)));
    Graph::build(n, edges).unwrap()
}

/// The `w x h` grid. Node at column `i` in `0..w`, row `j` in `0..h` has id
/// `i * h + j` and label `(i,j)`.
#[must_use]
pub fn grid_graph(w: usize, h: usize) -> Graph {
    let id = |i: usize, j: usize| (i * h + j) as u32;
    let mut edges = Vec::new();
    let mut labels = Vec::with_capacity(w * h);
    for i in 0..w {
        for j in 0..h {
            labels.push(format!("({i},{j})"));
            if i + 1 < w {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j + 1 < h {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    Graph::build(w * h, edges).unwrap().with_labels(labels)
}

/// A seeded random connected bipartite graph.
///
/// The parts are ids `0..ceil(n/2)` (left) and the rest (right). Each
/// cross-part pair becomes an edge independently with probability `p`; the
/// sample is then augmented deterministically to guarantee connectivity:
/// every component not containing node 0 gains one cross-part edge to an
/// anchor (node 0 for components holding a right node, the least right node
/// otherwise). Labels record the part (`L<i>` / `R<j>`).
#[must_use]
pub fn random_bipartite(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "probability out of range");
    let n_left = n.div_ceil(2);
    let n_right = n - n_left;
    let labels: Vec<String> = (0..n)
        .map(|v| {
            if v < n_left {
                format!("L{v}")
            } else {
                format!("R{}", v - n_left)
            }
        })
        .collect();
    if n_right == 0 {
        // 0 or 1 node: nothing to connect.
        return empty_graph(n).with_labels(labels);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n_left as u32 {
        for v in n_left as u32..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let sampled = Graph::build(n, edges.iter().copied()).unwrap();
    let comps = connected_components(&sampled);
    let anchor_right = n_left as u32; // least right node
    for comp in &comps {
        if comp.contains(0) {
            continue;
        }
        match comp.iter().find(|&v| v >= anchor_right) {
            // Component has a right node: hook it to left node 0.
            Some(r) => edges.push((0, r)),
            // Left-only component: hook its least node to the right anchor.
            None => edges.push((comp.iter().next().unwrap(), anchor_right)),
        }
    }
    Graph::build(n, edges).unwrap().with_labels(labels)
}
