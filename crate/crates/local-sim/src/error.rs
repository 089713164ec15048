use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimError {
    #[error("node {node} had not halted after {rounds} rounds")]
    NotHalted { node: u32, rounds: u32 },
    #[error("node {node} sent {got} messages at round {round}, expected one per port ({expected})")]
    BadSendArity { node: u32, round: u32, expected: usize, got: usize },
    #[error("id assignment invalid: {0}")]
    BadIds(String),
    #[error("no path from leader {leader} to node {node}")]
    Unreachable { leader: u32, node: u32 },
}
