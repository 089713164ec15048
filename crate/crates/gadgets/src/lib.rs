//! Hardness gadget generators with verifiable certificates.
//!
//! Two families of graphs separate local colorability from global
//! colorability:
//!
//! * **Iterated joins** ([`rjoin_gadget`]): starting from `K_chi`, each
//!   `2r`-join with a fresh clique raises the chromatic number by `chi - 1`
//!   while every radius-`r` view stays `chi`-colorable.
//! * **Quadrangulation quotients** ([`kb_gadget`]): gluing a grid's boundary
//!   with a flip yields an odd quadrangulation of the Klein bottle — a
//!   4-chromatic graph all of whose bounded-radius views are bipartite grid
//!   patches ([`kb_parity`] exhibits the obstruction).
//!
//! Both families ship subgraph covers ([`rjoin_cover`], [`kb_cover`]): a few
//! overlapping elements whose radius-`T` neighborhoods are certified easy
//! ([`SubgraphCover`], [`verify_cover`]). The assembler
//! ([`assemble_cheating_instance`]) splices copies of those neighborhoods
//! into a genuinely easy instance — a `chi`-chromatic graph or a plain grid
//! — that is locally indistinguishable from the hard gadget, the raw
//! material for failure-amplification experiments.

#![forbid(unsafe_code)]
#![warn(missing_docs)]

mod assemble;
mod cover;
mod error;
mod kb;
mod rjoin;

pub use assemble::{
    assemble_cheating_instance, family_host, AssembleTarget, CheatingInstance, PatchEmbedding,
};
pub use cover::{
    lattice_patch, verify_cover, CoverFamily, CoverReport, ElementCertificate, PatchIso,
    SubgraphCover,
};
pub use error::GadgetError;
pub use kb::{kb_cover, kb_gadget, kb_parity, Parity, ParityReport};
pub use rjoin::{rjoin_cover, rjoin_gadget, rjoin_size, SIZE_LIMIT};
