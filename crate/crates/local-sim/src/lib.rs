//! Synchronous message-passing execution with round accounting.
//!
//! Two fidelity levels: [`run_sync`] executes real per-node message
//! programs in lockstep rounds, while [`RoundLedger`] bills centrally
//! executed macro-operations (cluster gather/broadcast, power-graph
//! simulation) under the standard distributed accounting rules. The
//! pipeline uses the ledger; the message path keeps the model honest and
//! backs the non-signaling tests.

#![forbid(unsafe_code)]

mod error;
mod ledger;
mod programs;
mod sync;

pub use error::SimError;
pub use ledger::{
    charge_broadcast, charge_gather, charge_power_simulation, RoundLedger,
};
pub use programs::{FloodBall, OutputDegree, ParityFromMin};
pub use sync::{run_sync, run_sync_with_ids, NodeProgram, SyncResult};
