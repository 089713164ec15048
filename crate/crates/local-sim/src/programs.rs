//! Demonstration node programs exercising the message-level path.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use rand_chacha::ChaCha8Rng;

use crate::sync::NodeProgram;

/// Halts immediately, outputting the node's own degree. The zero-round
/// smoke test.
pub struct OutputDegree;

impl NodeProgram for OutputDegree {
    type State = u32;
    type Msg = ();
    type Output = u32;

    fn initialize(&self, _id: u32, degree: usize, _label: Option<&str>, _rng: &mut ChaCha8Rng) -> u32 {
        degree as u32
    }

    fn send(&self, _state: &u32, _round: u32) -> Vec<()> {
        unreachable!("all nodes halt before round 0")
    }

    fn receive(&self, state: u32, _round: u32, _inbox: Vec<()>) -> u32 {
        state
    }

    fn halted(&self, state: &u32) -> Option<u32> {
        Some(*state)
    }
}

/// Floods node ids for a fixed number of rounds, then outputs how many ids
/// were heard: the size of the radius-`radius` ball.
pub struct FloodBall {
    pub radius: u32,
}

#[derive(Clone)]
pub struct FloodState {
    known: BTreeSet<u32>,
    rounds_done: u32,
    ports: usize,
}

impl NodeProgram for FloodBall {
    type State = FloodState;
    type Msg = Vec<u32>;
    type Output = u32;

    fn initialize(&self, id: u32, degree: usize, _label: Option<&str>, _rng: &mut ChaCha8Rng) -> FloodState {
        FloodState { known: BTreeSet::from([id]), rounds_done: 0, ports: degree }
    }

    fn send(&self, state: &FloodState, _round: u32) -> Vec<Vec<u32>> {
        vec![state.known.iter().copied().collect(); state.ports]
    }

    fn receive(&self, mut state: FloodState, _round: u32, inbox: Vec<Vec<u32>>) -> FloodState {
        for msg in inbox {
            state.known.extend(msg);
        }
        state.rounds_done += 1;
        state
    }

    fn halted(&self, state: &FloodState) -> Option<u32> {
        (state.rounds_done == self.radius).then(|| state.known.len() as u32)
    }
}

/// Floods (id, distance) pairs until all `n` ids are known, then outputs
/// the parity of the distance to the minimum id. Synchronous flooding
/// delivers each id at a round equal to its true distance, so every node
/// halts after exactly its eccentricity and the run takes diameter rounds.
/// On bipartite graphs the outputs form a proper 2-coloring.
pub struct ParityFromMin {
    pub n: usize,
}

#[derive(Clone)]
pub struct ParityState {
    known: BTreeMap<u32, u32>,
    ports: usize,
}

impl NodeProgram for ParityFromMin {
    type State = ParityState;
    type Msg = Vec<(u32, u32)>;
    type Output = u32;

    fn initialize(&self, id: u32, degree: usize, _label: Option<&str>, _rng: &mut ChaCha8Rng) -> ParityState {
        ParityState { known: BTreeMap::from([(id, 0)]), ports: degree }
    }

    fn send(&self, state: &ParityState, _round: u32) -> Vec<Vec<(u32, u32)>> {
        let msg: Vec<(u32, u32)> = state.known.iter().map(|(&id, &d)| (id, d)).collect();
        vec![msg; state.ports]
    }

    fn receive(&self, mut state: ParityState, _round: u32, inbox: Vec<Vec<(u32, u32)>>) -> ParityState {
        for msg in inbox {
            for (id, d) in msg {
                let through = d + 1;
                state
                    .known
                    .entry(id)
                    .and_modify(|cur| *cur = (*cur).min(through))
                    .or_insert(through);
            }
        }
        state
    }

    fn halted(&self, state: &ParityState) -> Option<u32> {
        if state.known.len() < self.n {
            return None;
        }
        let (_, dist) = state.known.iter().next().expect("n >= 1 ids known");
        Some(dist % 2)
    }
}
