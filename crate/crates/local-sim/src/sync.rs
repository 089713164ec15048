//! Lockstep synchronous execution of per-node message programs.
//!
//! Ports follow the ascending-neighbor-id convention: port p of node v
//! leads to the p-th smallest neighbor of v. This is an artifact
//! convention — the model itself leaves port numbering open.

use graph_core::{seed::mix_seed, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::SimError;

/// A synchronous message-passing node program. One instance describes the
/// behavior of every node; per-node data lives in `State`.
///
/// Execution is deterministic given the graph, the id assignment, and the
/// seed: all randomness must be drawn from the stream handed to
/// [`NodeProgram::initialize`].
pub trait NodeProgram {
    type State;
    type Msg: Clone;
    type Output: Clone;

    /// Builds the initial state from the node's own view: its id, degree,
    /// optional input label, and private randomness stream.
    fn initialize(
        &self,
        id: u32,
        degree: usize,
        label: Option<&str>,
        rng: &mut ChaCha8Rng,
    ) -> Self::State;

    /// One outgoing message per port, in port order.
    fn send(&self, state: &Self::State, round: u32) -> Vec<Self::Msg>;

    /// Consumes the inbound messages (one per port, in port order).
    fn receive(&self, state: Self::State, round: u32, inbox: Vec<Self::Msg>) -> Self::State;

    /// `Some(output)` once the node has halted. Checked before round 0 and
    /// after every round; a halted node keeps sending its frozen state's
    /// messages but no longer receives.
    fn halted(&self, state: &Self::State) -> Option<Self::Output>;
}

/// Result of a completed synchronous run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyncResult<O> {
    /// Output per node position (not per id).
    pub outputs: Vec<O>,
    /// Rounds executed until the last node halted.
    pub rounds: u32,
}

/// Runs `prog` on `g` with the identity id assignment.
pub fn run_sync<P: NodeProgram>(
    g: &Graph,
    prog: &P,
    max_rounds: u32,
    seed: u64,
) -> Result<SyncResult<P::Output>, SimError> {
    let ids: Vec<u32> = (0..g.n() as u32).collect();
    run_sync_with_ids(g, prog, max_rounds, seed, &ids)
}

/// Runs `prog` on `g` where node position v carries identifier `ids[v]`.
/// Ids must be distinct; each node's randomness stream is derived from
/// (seed, id), so it travels with the identifier under permutation.
pub fn run_sync_with_ids<P: NodeProgram>(
    g: &Graph,
    prog: &P,
    max_rounds: u32,
    seed: u64,
    ids: &[u32],
) -> Result<SyncResult<P::Output>, SimError> {
    let n = g.n();
    if ids.len() != n {
        return Err(SimError::BadIds(format!(
            "{} ids supplied for {n} nodes",
            ids.len()
        )));
    }
    {
        let mut sorted = ids.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(SimError::BadIds("duplicate id".into()));
        }
    }
    let mut states: Vec<P::State> = (0..n)
        .map(|v| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, u64::from(ids[v])));
            prog.initialize(ids[v], g.degree(v as u32), g.label(v as u32), &mut rng)
        })
        .collect();
    let mut outputs: Vec<Option<P::Output>> = states.iter().map(|s| prog.halted(s)).collect();
    let mut rounds = 0u32;
    while outputs.iter().any(Option::is_none) {
        if rounds == max_rounds {
            let node = outputs.iter().position(Option::is_none).expect("some node unfinished");
            return Err(SimError::NotHalted { node: node as u32, rounds });
        }
        // Send phase: every node (halted or not) emits one message per port.
        let mut sent: Vec<Vec<P::Msg>> = Vec::with_capacity(n);
        for (v, state) in states.iter().enumerate() {
            let msgs = prog.send(state, rounds);
            if msgs.len() != g.degree(v as u32) {
                return Err(SimError::BadSendArity {
                    node: v as u32,
                    round: rounds,
                    expected: g.degree(v as u32),
                    got: msgs.len(),
                });
            }
            sent.push(msgs);
        }
        // Deliver and receive: only nodes that have not halted evolve.
        let mut next_states = Vec::with_capacity(n);
        for (v, state) in states.into_iter().enumerate() {
            if outputs[v].is_some() {
                next_states.push(state);
                continue;
            }
            let inbox: Vec<P::Msg> = g
                .neighbors(v as u32)
                .iter()
                .map(|&u| {
                    let port_of_v_at_u = g
                        .neighbors(u)
                        .binary_search(&(v as u32))
                        .expect("adjacency is symmetric");
                    sent[u as usize][port_of_v_at_u].clone()
                })
                .collect();
            next_states.push(prog.receive(state, rounds, inbox));
        }
        states = next_states;
        rounds += 1;
        for (v, state) in states.iter().enumerate() {
            if outputs[v].is_none() {
                outputs[v] = prog.halted(state);
            }
        }
    }
    Ok(SyncResult {
        outputs: outputs.into_iter().map(|o| o.expect("loop exits only when all halted")).collect(),
        rounds,
    })
}
