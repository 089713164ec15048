//! The core [`Graph`] and [`NodeSet`] types.

use std::fmt;

use thiserror::Error;

/// Errors produced by graph construction and queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    /// An edge endpoint is not a valid node id.
    #[error("node id {node} out of range (graph has {n} nodes)")]
    OutOfRange { node: u32, n: usize },
    /// An edge connects a node to itself.
    #[error("self-loop at node {node}")]
    SelfLoop { node: u32 },
    /// An operation requires a nonempty graph.
    #[error("operation requires a nonempty graph")]
    EmptyGraph,
    /// A node-pair distance was requested between unreachable nodes.
    #[error("nodes {u} and {v} are not connected")]
    Disconnected { u: u32, v: u32 },
    /// The isomorphism search exceeded its node-expansion budget.
    #[error("isomorphism search exceeded its budget of {budget} expansions")]
    TooLarge { budget: u64 },
    /// A generator refused to build a graph above its size limit.
    #[error("requested graph with {requested} nodes exceeds the limit of {limit}")]
    SizeLimit { requested: u64, limit: u64 },
    /// Malformed graph text input.
    #[error("graph text parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An immutable simple undirected graph.
///
/// Nodes are the dense ids `0..n`. Adjacency lists are sorted ascending and
/// deduplicated; self-loops are rejected. Each node may carry an optional
/// free-form label (generators use labels to record provenance such as
/// recursive coordinates).
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m())
    }
}

impl Graph {
    /// Builds a graph from a node count and an edge list.
    ///
    /// Duplicate edges (in either orientation) are collapsed; endpoints are
    /// validated. Fails with [`GraphError::OutOfRange`] or
    /// [`GraphError::SelfLoop`].
    pub fn build(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop { node: u });
            }
            for x in [u, v] {
                if x as usize >= n {
                    return Err(GraphError::OutOfRange { node: x, n });
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        debug_assert!(m % 2 == 0);
        Ok(Self { adj, m: m / 2, labels: None })
    }

    /// Number of nodes.
    #[must_use]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[must_use]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbor list of `v`.
    #[must_use]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    /// Degree of `v`.
    #[must_use]
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// Whether the edge `{u, v}` is present.
    #[must_use]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Iterates over all edges as pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    /// All node ids, ascending.
    pub fn nodes(&self) -> impl Iterator<Item = u32> {
        0..self.n() as u32
    }

    /// Label of `v`, if labels are attached.
    #[must_use]
    pub fn label(&self, v: u32) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v as usize].as_str())
    }

    /// Full label table, if attached.
    #[must_use]
    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Returns the same graph with the given per-node labels attached.
    ///
    /// # Panics
    /// Panics if the label count does not match the node count.
    #[must_use]
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "label count must match node count");
        self.labels = Some(labels);
        self
    }

    /// Drops any attached labels.
    #[must_use]
    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }
}

/// Builds a graph from a node count and an edge list (free-function form of
/// [`Graph::build`]).
pub fn build_graph(
    n: usize,
    edges: impl IntoIterator<Item = (u32, u32)>,
) -> Result<Graph, GraphError> {
    Graph::build(n, edges)
}

/// A sorted set of distinct node ids referencing some [`Graph`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct NodeSet(Vec<u32>);

impl NodeSet {
    /// Builds a node set from arbitrary ids, sorting and deduplicating.
    #[must_use]
    pub fn from_unsorted(mut ids: Vec<u32>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Self(ids)
    }

    /// Builds an empty node set.
    #[must_use]
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Validates that every id is `< n`.
    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.iter().find(|&&v| v as usize >= n) {
            Some(&node) => Err(GraphError::OutOfRange { node, n }),
            None => Ok(()),
        }
    }

    /// Membership test (binary search).
    #[must_use]
    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Number of ids in the set.
    #[must_use]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether the set is empty.
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted slice view.
    #[must_use]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Iterates ids ascending.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    /// Set union.
    #[must_use]
    pub fn union(&self, other: &NodeSet) -> NodeSet {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        NodeSet::from_unsorted(v)
    }

    /// Set difference `self ∖ other`.
    #[must_use]
    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        NodeSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    /// Whether `self ⊆ other`.
    #[must_use]
    pub fn is_subset_of(&self, other: &NodeSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl FromIterator<u32> for NodeSet {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        Self::from_unsorted(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_normalizes_duplicates() {
        let g = Graph::build(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(0), &[1]);
        assert_eq!(g.neighbors(1), &[0]);
    }

    #[test]
    fn build_rejects_self_loop() {
        assert_eq!(
            Graph::build(2, [(0, 0)]).unwrap_err(),
            GraphError::SelfLoop { node: 0 }
        );
    }

    #[test]
    fn build_rejects_out_of_range() {
        assert_eq!(
            Graph::build(2, [(0, 2)]).unwrap_err(),
            GraphError::OutOfRange { node: 2, n: 2 }
        );
    }

    #[test]
    fn build_path() {
        let g = Graph::build(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert!(g.has_edge(0, 1));
        assert!(!g.has_edge(0, 2));
    }

    #[test]
    fn node_set_normalizes() {
        let s = NodeSet::from_unsorted(vec![3, 1, 3, 2]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(s.contains(2));
        assert!(!s.contains(0));
    }

    #[test]
    fn node_set_algebra() {
        let a = NodeSet::from_unsorted(vec![1, 2, 3]);
        let b = NodeSet::from_unsorted(vec![3, 4]);
        assert_eq!(a.union(&b).as_slice(), &[1, 2, 3, 4]);
        assert_eq!(a.difference(&b).as_slice(), &[1, 2]);
        assert!(NodeSet::from_unsorted(vec![2]).is_subset_of(&a));
        assert!(!b.is_subset_of(&a));
    }
}
