//! Simulator contract tests: the worked examples, reproducibility, id
//! permutations, and the non-signaling invariance that makes a T-round
//! program blind to far-away edits.

use graph_core::{complete_graph, path_graph, seed::mix_seed, Graph};
use local_sim::{
    run_sync, run_sync_with_ids, FloodBall, NodeProgram, OutputDegree, ParityFromMin, SimError,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn degrees_on_k3_take_zero_rounds() {
    let g = complete_graph(3);
    let res = run_sync(&g, &OutputDegree, 10, 0).unwrap();
    assert_eq!(res.outputs, vec![2, 2, 2]);
    assert_eq!(res.rounds, 0);
}

#[test]
fn flood_ball_sizes_on_p5() {
    let g = path_graph(5);
    let res = run_sync(&g, &FloodBall { radius: 2 }, 10, 0).unwrap();
    assert_eq!(res.outputs, vec![3, 4, 5, 4, 3]);
    assert_eq!(res.rounds, 2);
}

#[test]
fn parity_two_colors_p8_in_seven_rounds() {
    let g = path_graph(8);
    let res = run_sync(&g, &ParityFromMin { n: 8 }, 20, 0).unwrap();
    assert_eq!(res.rounds, 7);
    assert_eq!(res.outputs, vec![0, 1, 0, 1, 0, 1, 0, 1]);
}

#[test]
fn runs_are_reproducible() {
    let g = path_graph(9);
    let a = run_sync(&g, &FloodBall { radius: 3 }, 10, 42).unwrap();
    let b = run_sync(&g, &FloodBall { radius: 3 }, 10, 42).unwrap();
    assert_eq!(a, b);
}

#[test]
fn id_permutations_leave_structural_outputs_alone() {
    let g = path_graph(8);
    let identity = run_sync(&g, &FloodBall { radius: 2 }, 10, 1).unwrap();
    let reversed: Vec<u32> = (0..8).rev().collect();
    let permuted = run_sync_with_ids(&g, &FloodBall { radius: 2 }, 10, 1, &reversed).unwrap();
    // Ball sizes do not depend on identifiers.
    assert_eq!(identity.outputs, permuted.outputs);

    // Parity outputs do depend on which node carries the minimum id, but
    // they must still properly 2-color the path.
    let res = run_sync_with_ids(&g, &ParityFromMin { n: 8 }, 20, 1, &reversed).unwrap();
    for w in res.outputs.windows(2) {
        assert_ne!(w[0], w[1]);
    }
}

#[test]
fn unfinished_runs_error_out() {
    let g = path_graph(6);
    let err = run_sync(&g, &FloodBall { radius: 5 }, 3, 0).unwrap_err();
    assert!(matches!(err, SimError::NotHalted { rounds: 3, .. }));
}

#[test]
fn duplicate_ids_are_rejected() {
    let g = path_graph(3);
    let err = run_sync_with_ids(&g, &OutputDegree, 1, 0, &[0, 0, 1]).unwrap_err();
    assert!(matches!(err, SimError::BadIds(_)));
}

struct LopsidedSender;

impl NodeProgram for LopsidedSender {
    type State = ();
    type Msg = ();
    type Output = ();

    fn initialize(&self, _: u32, _: usize, _: Option<&str>, _: &mut ChaCha8Rng) -> () {}

    fn send(&self, _state: &(), _round: u32) -> Vec<()> {
        vec![()] // wrong arity for any node of degree != 1
    }

    fn receive(&self, _state: (), _round: u32, _inbox: Vec<()>) -> () {}

    fn halted(&self, _state: &()) -> Option<()> {
        None
    }
}

#[test]
fn wrong_send_arity_is_reported() {
    let g = path_graph(3); // middle node has degree 2
    let err = run_sync(&g, &LopsidedSender, 5, 0).unwrap_err();
    assert!(matches!(err, SimError::BadSendArity { node: 1, .. }));
}

/// Distance from `v` to the closer endpoint of (a, b).
fn dist_to_edge(g: &Graph, v: u32, a: u32, b: u32) -> u32 {
    let d = graph_core::bfs_distances(g, v);
    d[a as usize].min(d[b as usize])
}

#[test]
fn far_edits_cannot_change_t_round_outputs() {
    // For a program halting by round T, outputs of nodes farther than T
    // from a mutated edge must not move. 20 random (graph, edit) pairs.
    let t = 2u32;
    let prog = FloodBall { radius: t };
    let mut checked_nodes = 0usize;
    for trial in 0..20u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(777, trial));
        let n = rng.gen_range(12..=20usize);
        // A long cycle backbone keeps distances large; sprinkle chords.
        let mut edges: Vec<(u32, u32)> = (0..n as u32)
            .map(|u| {
                let v = (u + 1) % n as u32;
                (u.min(v), u.max(v))
            })
            .collect();
        for _ in 0..n / 4 {
            let u = rng.gen_range(0..n as u32);
            let v = rng.gen_range(0..n as u32);
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }
        let before = Graph::build(n, edges.clone()).unwrap();
        // Mutate: flip one random pair (add if absent, remove if present,
        // keeping the backbone so the graph stays connected).
        let (a, b) = loop {
            let a = rng.gen_range(0..n as u32);
            let b = rng.gen_range(0..n as u32);
            if a != b && (a + 1) % n as u32 != b && (b + 1) % n as u32 != a {
                break (a.min(b), a.max(b));
            }
        };
        let mut mutated = edges.clone();
        if before.has_edge(a, b) {
            mutated.retain(|&e| e != (a, b));
        } else {
            mutated.push((a, b));
        }
        let after = Graph::build(n, mutated).unwrap();
        let out_before = run_sync(&before, &prog, 10, trial).unwrap().outputs;
        let out_after = run_sync(&after, &prog, 10, trial).unwrap().outputs;
        for v in 0..n as u32 {
            if dist_to_edge(&before, v, a, b) > t && dist_to_edge(&after, v, a, b) > t {
                assert_eq!(
                    out_before[v as usize], out_after[v as usize],
                    "trial {trial}: node {v} saw the edit to ({a}, {b})"
                );
                checked_nodes += 1;
            }
        }
    }
    assert!(checked_nodes > 50, "only {checked_nodes} far nodes checked; weaken the geometry");
}
