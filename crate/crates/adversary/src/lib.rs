//! Empirical adversary against locality-bounded coloring algorithms.
//!
//! The lower-bound gadgets in the `gadgets` crate come with subgraph covers:
//! `k` elements whose radius-`T` neighborhoods are certifiably
//! indistinguishable from patches of an easy instance. This crate turns that
//! structural fact into an experiment:
//!
//! 1. Wrap the algorithm under test as a [`Victim`] — a sealed box that maps
//!    `(graph, seed)` to a coloring and declares its reading radius and
//!    claimed palette size.
//! 2. [`estimate_failure`] runs the victim on the gadget and counts, per
//!    cover element, how often the output violates the claim inside that
//!    element. Since the victim claims fewer colors than the gadget needs,
//!    every run fails somewhere, so some element fails with rate at least
//!    `1/k`.
//! 3. [`run_attack`] splices `N` copies of the worst element's neighborhood
//!    into a genuinely easy instance and measures the amplified failure
//!    rate, which for independent per-copy randomness approaches
//!    `1 - (1 - 1/k)^N`.
//!
//! All randomness is derived from a single seed via counter-mode mixing, so
//! every experiment is exactly reproducible.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

mod attack;
mod error;
mod victim;

pub use attack::{
    clopper_pearson95, estimate_failure, run_attack, AttackMode, AttackReport, FailureEstimate,
};
pub use error::AdversaryError;
pub use victim::{Locality, Victim};
