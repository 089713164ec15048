//! Deterministic sub-seed derivation.
//!
//! All randomized components derive per-purpose seeds from a single user
//! seed with [`mix_seed`], so adding a consumer never perturbs the stream
//! of another.

/// Mixes a base seed with a stream index into an independent-looking seed
/// (splitmix64 finalizer over the xored pair).
#[must_use]
pub fn mix_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed.wrapping_add(stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
