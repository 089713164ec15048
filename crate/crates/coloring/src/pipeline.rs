//! Coloring a graph from a network decomposition of its cube.
//!
//! Color classes are processed in order; every cluster of a non-final class
//! is colored with [`hide_coloring`] so that its top color class never faces
//! the rest of the graph, while final-class clusters take a plain exact
//! coloring (their top class maps to the shared hidden color as well, which
//! keeps the palette bound at `α(χ−1)+1`). Nodes that received several
//! assignments keep the largest under the total order
//! `Hidden < (1,1) < … < (α,1) < (1,2) < …`, so a hidden value survives only
//! when nothing visible ever arrived.

use analysis::{exact_chromatic_number, is_proper_coloring, Color, DEFAULT_SOLVER_BUDGET};
use clustering::{BaseClusterer, BOOTSTRAP_BETA};
use graph_core::{induced_subgraph, neighborhood_of_set, power_graph, Graph, NodeSet};
use local_sim::{charge_broadcast, charge_gather, RoundLedger};
use netdec::{network_decomposition, NetworkDecomposition};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::ColoringError;
use crate::hide::{hide_coloring, HidingRecord};

/// Base-clusterer flavor used by [`full_pipeline`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Deterministic ball carving.
    Det,
    /// Shifted-start Voronoi growth, seeded.
    Rand,
}

impl Mode {
    /// Canonical lowercase name.
    #[must_use]
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Det => "det",
            Mode::Rand => "rand",
        }
    }

    fn base(self) -> BaseClusterer {
        match self {
            Mode::Det => BaseClusterer::Det,
            // The pipeline drives the clusterer through power graphs whose
            // working components are frequently complete, where slow shift
            // decay is what keeps the half-clustered guarantee reliable.
            Mode::Rand => BaseClusterer::Rand { beta: BOOTSTRAP_BETA },
        }
    }
}

/// A finished pipeline run: the remapped coloring plus everything needed to
/// audit it.
#[derive(Debug)]
pub struct PipelineResult {
    /// Nodes of the input graph.
    pub n: usize,
    /// Edges of the input graph.
    pub m: usize,
    /// Number of decomposition color classes.
    pub alpha: u32,
    /// Base-clusterer flavor, when the run came from [`full_pipeline`].
    pub mode: Option<Mode>,
    /// Seed, when the run came from [`full_pipeline`].
    pub seed: Option<u64>,
    /// Largest color value in `coloring`.
    pub colors_used: u32,
    /// Whether the coloring is proper (always true; kept for reporting).
    pub proper: bool,
    /// Final colors, one per node, values in `1..=colors_used`.
    pub coloring: Vec<u32>,
    /// Rounds by phase, in input-graph rounds.
    pub rounds: RoundLedger,
    /// The decomposition the run colored.
    pub decomposition: NetworkDecomposition,
    /// Per-cluster coloring records, parallel to `decomposition.clusters`.
    pub hidings: Vec<HidingRecord>,
}

impl PipelineResult {
    /// JSON view: `{n, m, alpha, mode, seed, colors_used, proper,
    /// rounds: {phase: rounds}, coloring: [ints]}`.
    #[must_use]
    pub fn to_json_value(&self) -> Value {
        let mut rounds = serde_json::Map::new();
        for (name, r) in self.rounds.phases() {
            rounds.insert(name.to_string(), Value::from(r));
        }
        serde_json::json!({
            "n": self.n,
            "m": self.m,
            "alpha": self.alpha,
            "mode": self.mode.map(Mode::as_str),
            "seed": self.seed,
            "colors_used": self.colors_used,
            "proper": self.proper,
            "rounds": rounds,
            "coloring": self.coloring,
        })
    }
}

/// Total order on palette values: `Hidden` smallest, pairs by palette index
/// then class.
fn palette_rank(c: Color) -> (u32, u32) {
    match c {
        Color::Hidden => (0, 0),
        Color::Pair { a, b } => (b, a),
        Color::Int(x) => unreachable!("unexpected remapped color {x} before resolution"),
    }
}

/// Final remap to integers: `Hidden → 1`, `(a, b) → α(b−1) + a + 1`.
fn remap(c: Color, alpha: u32) -> u32 {
    match c {
        Color::Hidden => 1,
        Color::Pair { a, b } => alpha * (b - 1) + a + 1,
        Color::Int(x) => unreachable!("unexpected remapped color {x} before resolution"),
    }
}

/// Checks that `dec` is a decomposition of the cube of `g`: a partition into
/// nonempty clusters with colors in `1..=alpha` such that same-color
/// clusters are never within distance three in `g`.
fn validate(
    g: &Graph,
    g3: &Graph,
    dec: &NetworkDecomposition,
    alpha: u32,
) -> Result<(), ColoringError> {
    let invalid = |msg: String| Err(ColoringError::InvalidDecomposition(msg));
    if dec.colors.len() != dec.clusters.len() {
        return invalid("colors are not parallel to clusters".into());
    }
    let mut owner: Vec<u32> = vec![u32::MAX; g.n()];
    for (idx, cluster) in dec.clusters.iter().enumerate() {
        let color = dec.colors[idx];
        if !(1..=alpha).contains(&color) {
            return invalid(format!("cluster {idx} has color {color} outside 1..={alpha}"));
        }
        if cluster.is_empty() {
            return invalid(format!("cluster {idx} is empty"));
        }
        if cluster.check_range(g.n()).is_err() {
            return invalid(format!("cluster {idx} mentions nodes outside the graph"));
        }
        for v in cluster.iter() {
            if owner[v as usize] != u32::MAX {
                return invalid(format!(
                    "node {v} belongs to clusters {} and {idx}",
                    owner[v as usize]
                ));
            }
            owner[v as usize] = idx as u32;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == u32::MAX) {
        return invalid(format!("node {v} belongs to no cluster"));
    }
    for (u, v) in g3.edges() {
        let (cu, cv) = (owner[u as usize], owner[v as usize]);
        if cu != cv && dec.colors[cu as usize] == dec.colors[cv as usize] {
            return invalid(format!(
                "clusters {cu} and {cv} share color {} but nodes {u} and {v} \
                 are within distance 3",
                dec.colors[cu as usize]
            ));
        }
    }
    Ok(())
}

/// Plain exact coloring of one cluster, top class mapped to the hidden
/// color (final-class clusters never extend into their boundary).
fn plain_record(g: &Graph, cluster: &NodeSet) -> Result<HidingRecord, ColoringError> {
    let (sub, map) = induced_subgraph(g, cluster).expect("cluster is within range");
    let cert = exact_chromatic_number(&sub, DEFAULT_SOLVER_BUDGET)?;
    let chi_loc = cert.chi;
    let phi = cluster
        .iter()
        .map(|node| {
            let sub_id = map.to_sub(node).expect("cluster nodes are in the subgraph");
            let psi = cert.coloring[sub_id as usize];
            let value = if psi == chi_loc { Color::Hidden } else { Color::Int(psi) };
            (node, value)
        })
        .collect();
    Ok(HidingRecord {
        a: cluster.clone(),
        a_prime: cluster.clone(),
        phi,
        chi_loc,
    })
}

/// Colors `g` given a network decomposition of `power_graph(g, 3)`.
///
/// The decomposition is validated first and rejected with
/// [`ColoringError::InvalidDecomposition`] if it is not a partition into
/// nonempty clusters, uses colors outside `1..=alpha`, or places two
/// same-color clusters within distance three of each other.
pub fn color_with_decomposition(
    g: &Graph,
    dec: NetworkDecomposition,
    alpha: u32,
) -> Result<PipelineResult, ColoringError> {
    let g3 = power_graph(g, 3);
    color_decomposed(g, &g3, dec, alpha, None, None, RoundLedger::new())
}

/// Runs the whole pipeline: cube graph, network decomposition (with every
/// decomposition round charged threefold for the power-graph simulation),
/// then decomposition-driven coloring.
pub fn full_pipeline(
    g: &Graph,
    alpha: u32,
    mode: Mode,
    seed: u64,
) -> Result<PipelineResult, ColoringError> {
    let g3 = power_graph(g, 3);
    let dec = network_decomposition(&g3, alpha, mode.base(), seed)?;
    let mut ledger = RoundLedger::new();
    for (name, rounds) in dec.meta.ledger.phases() {
        // One round on the cube costs three rounds on the input graph.
        ledger.charge(name, rounds * 3);
    }
    color_decomposed(g, &g3, dec, alpha, Some(mode), Some(seed), ledger)
}

fn color_decomposed(
    g: &Graph,
    g3: &Graph,
    dec: NetworkDecomposition,
    alpha: u32,
    mode: Option<Mode>,
    seed: Option<u64>,
    mut ledger: RoundLedger,
) -> Result<PipelineResult, ColoringError> {
    if alpha == 0 {
        return Err(ColoringError::BadParams("alpha must be at least 1".into()));
    }
    validate(g, g3, &dec, alpha)?;
    let n = g.n();
    let mut assignments: Vec<Vec<Color>> = vec![Vec::new(); n];
    let mut hidings: Vec<Option<HidingRecord>> = vec![None; dec.clusters.len()];
    for class in 1..=alpha {
        let mut class_depth = 0u64;
        for (idx, cluster) in dec.clusters.iter().enumerate() {
            if dec.colors[idx] != class {
                continue;
            }
            let leader = cluster.iter().next().expect("validated nonempty");
            let rec = if class < alpha {
                hide_coloring(g, cluster)?
            } else {
                plain_record(g, cluster)?
            };
            for &(node, value) in &rec.phi {
                let paletted = match value {
                    Color::Hidden => Color::Hidden,
                    Color::Int(b) => Color::Pair { a: class, b },
                    Color::Pair { .. } => unreachable!("records carry indices, not pairs"),
                };
                assignments[node as usize].push(paletted);
            }
            // Every cluster elects its leader, gathers the region it will
            // color, and broadcasts the result; clusters of one class work
            // concurrently, so the class costs its deepest cluster.
            let region = if class < alpha {
                neighborhood_of_set(g, cluster, 1)
            } else {
                cluster.clone()
            };
            let span = |e: local_sim::SimError| {
                ColoringError::InvalidDecomposition(format!(
                    "cluster {idx} is not connected to its leader: {e}"
                ))
            };
            let election = charge_gather(g, cluster, leader).map_err(span)?;
            let gather = charge_gather(g, &region, leader).map_err(span)?;
            let broadcast = charge_broadcast(g, &region, leader).map_err(span)?;
            class_depth = class_depth.max(election + gather + broadcast);
            hidings[idx] = Some(rec);
        }
        ledger.charge("cluster_coloring", class_depth);
    }
    let mut coloring = Vec::with_capacity(n);
    for v in 0..n {
        let phi_v = &assignments[v];
        assert!(!phi_v.is_empty(), "node {v} was never colored");
        let best = phi_v
            .iter()
            .copied()
            .max_by_key(|&c| palette_rank(c))
            .expect("nonempty");
        coloring.push(remap(best, alpha));
    }
    if let Err(violation) = is_proper_coloring(g, &coloring) {
        panic!("pipeline produced an improper coloring: {violation:?}");
    }
    let colors_used = coloring.iter().copied().max().unwrap_or(0);
    Ok(PipelineResult {
        n,
        m: g.m(),
        alpha,
        mode,
        seed,
        colors_used,
        proper: true,
        coloring,
        rounds: ledger,
        decomposition: dec,
        hidings: hidings
            .into_iter()
            .map(|r| r.expect("every cluster is processed"))
            .collect(),
    })
}
