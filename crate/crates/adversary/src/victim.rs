//! Candidate algorithms under attack.
//!
//! A victim is a sealed procedure `(graph, seed) -> coloring` plus two
//! self-declared facts: the radius it reads (its locality) and the palette
//! size it claims. The harness never inspects a victim's internals — it only
//! checks the declared locality against a cover's certified radius and
//! judges the returned colorings.

use coloring::{full_pipeline, Mode};
use graph_core::seed::mix_seed;
use graph_core::{ball, induced_subgraph, Graph};
use std::fmt;

/// How far a victim's per-node output can depend on the input graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Locality {
    /// Each node's output is a function of its radius-`t` ball (and seeds).
    Rounds(u32),
    /// The output may depend on the whole graph.
    Global,
}

/// A sealed candidate algorithm with declared locality and palette size.
pub struct Victim {
    name: String,
    locality: Locality,
    colors: u32,
    run: Box<dyn Fn(&Graph, u64) -> Vec<u32> + Send + Sync>,
}

impl fmt::Debug for Victim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Victim")
            .field("name", &self.name)
            .field("locality", &self.locality)
            .field("colors", &self.colors)
            .finish_non_exhaustive()
    }
}

impl Victim {
    /// Wraps an arbitrary procedure as a victim. The declared `locality` and
    /// `colors` are trusted as-is; misdeclaring them only makes the victim
    /// easier to catch.
    pub fn new(
        name: impl Into<String>,
        locality: Locality,
        colors: u32,
        run: impl Fn(&Graph, u64) -> Vec<u32> + Send + Sync + 'static,
    ) -> Self {
        Self { name: name.into(), locality, colors, run: Box::new(run) }
    }

    /// The victim's display name.
    #[must_use]
    pub fn name(&self) -> &str {
        &self.name
    }

    /// The victim's declared locality.
    #[must_use]
    pub fn locality(&self) -> Locality {
        self.locality
    }

    /// The palette size the victim claims to stay within.
    #[must_use]
    pub fn colors(&self) -> u32 {
        self.colors
    }

    /// Runs the victim once.
    #[must_use]
    pub fn run(&self, g: &Graph, seed: u64) -> Vec<u32> {
        (self.run)(g, seed)
    }

    /// The trivial victim: every node outputs color 1 while claiming a
    /// `colors`-sized palette. Locality 0.
    #[must_use]
    pub fn const_one(colors: u32) -> Self {
        Self::new("const1", Locality::Rounds(0), colors, |g, _| vec![1; g.n()])
    }

    /// A victim that replays a memorized coloring, claiming `colors` colors.
    /// Locality 0 (each node only looks up its own entry). Useful as the
    /// "already knows a correct answer" baseline.
    #[must_use]
    pub fn memorized(name: impl Into<String>, colors: u32, coloring: Vec<u32>) -> Self {
        Self::new(name, Locality::Rounds(0), colors, move |g, _| {
            assert_eq!(g.n(), coloring.len(), "memorized coloring fits one graph only");
            coloring.clone()
        })
    }

    /// The ball-local pipeline victim: every node runs the decomposition
    /// pipeline on its own radius-`radius` ball (seeded independently per
    /// node) and keeps its own color, claiming `colors` colors overall.
    ///
    /// This is the honest pipeline forced into a locality straitjacket: on
    /// graphs whose balls are easy (say bipartite patches of a gadget) it
    /// happily emits few colors per ball, but nothing coordinates the balls
    /// globally.
    #[must_use]
    pub fn ball_pipeline(radius: u32, alpha: u32, colors: u32) -> Self {
        let name = format!("pipeline{colors}");
        Self::new(name, Locality::Rounds(radius), colors, move |g, seed| {
            (0..g.n() as u32)
                .map(|v| {
                    let b = ball(g, v, radius);
                    let (sub, idmap) =
                        induced_subgraph(g, &b).expect("ball node ids are in range");
                    let center =
                        idmap.to_sub(v).expect("the center lies in its own ball");
                    let result =
                        full_pipeline(&sub, alpha, Mode::Rand, mix_seed(seed, u64::from(v)))
                            .expect("the pipeline accepts any connected ball");
                    result.coloring[center as usize]
                })
                .collect()
        })
    }

    /// The unconstrained honest pipeline, declared global: it reads the whole
    /// graph, so per-element failure estimation refuses it — use it for
    /// whole-instance sanity runs.
    #[must_use]
    pub fn honest_pipeline(alpha: u32, colors: u32) -> Self {
        Self::new("honest", Locality::Global, colors, move |g, seed| {
            full_pipeline(g, alpha, Mode::Rand, seed)
                .expect("the pipeline accepts any connected graph")
                .coloring
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::cycle_graph;

    #[test]
    fn const_one_colors_everything_one() {
        let v = Victim::const_one(3);
        assert_eq!(v.run(&cycle_graph(5), 7), vec![1; 5]);
        assert_eq!(v.colors(), 3);
        assert_eq!(v.locality(), Locality::Rounds(0));
    }

    #[test]
    fn ball_pipeline_is_deterministic_per_seed() {
        let v = Victim::ball_pipeline(1, 2, 3);
        let g = cycle_graph(8);
        assert_eq!(v.run(&g, 42), v.run(&g, 42));
        assert_eq!(v.name(), "pipeline3");
    }

    #[test]
    fn memorized_replays() {
        let v = Victim::memorized("fixed", 2, vec![1, 2, 1, 2]);
        assert_eq!(v.run(&cycle_graph(4), 0), vec![1, 2, 1, 2]);
    }
}
