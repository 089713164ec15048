//! Immutable simple undirected graphs with contiguous integer node ids,
//! plus every construction and query primitive the rest of the workspace
//! builds on: breadth-first distances, power graphs, neighborhoods, induced
//! subgraphs, tensor products, r-joins, disjoint unions, weak diameters,
//! isomorphism testing, deterministic generators, and a bit-exact text
//! interchange format.
//!
//! Graphs are immutable after construction and safe to share across threads
//! for read-only use.

#![forbid(unsafe_code)]

mod builders;
mod graph;
mod io;
mod iso;
mod ops;
pub mod seed;

pub use builders::{
    complete_graph, cycle_graph, empty_graph, grid_graph, path_graph, random_bipartite,
};
pub use graph::{build_graph, Graph, GraphError, NodeSet};
pub use io::{labels_to_json, labels_from_json, parse_graph_text, render_graph_text};
pub use iso::{is_isomorphic, DEFAULT_ISO_BUDGET};
pub use ops::{
    ball, bfs_distances, bfs_distances_multi, connected_components, disjoint_union,
    induced_subgraph, neighborhood_of_set, power_graph, r_join, same_graph, tensor_product,
    weak_diameter, IdMap, RJoinLayout, RJoinNode, UNREACHABLE,
};
