//! Deterministic random streams.
//!
//! Every random quantity in the crate is drawn from ChaCha8 (`rand_chacha`),
//! seeded with a 64-bit key obtained by folding a master seed and a path of
//! stream identifiers through SplitMix64. A Monte Carlo trial, a resampled test
//! set or a synthetic dataset therefore owns an independent stream addressed by
//! `(master seed, purpose, index...)`, and results do not depend on evaluation
//! order. Uniform floats take the top 53 bits of `next_u64`.
//!
//! Changing any of this changes every seeded result.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Stream tags, kept distinct so no two purposes share a stream.
pub mod purpose {
    pub const SAMPLE: u64 = 1;
    pub const DRAWS: u64 = 2;
    pub const SHOTS_TO_REJECT: u64 = 3;
    pub const SYNTHETIC_DATA: u64 = 4;
    pub const KL_RESAMPLE: u64 = 5;
    pub const OPTIMIZER_START: u64 = 6;
}

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finaliser.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Key for the stream addressed by `path` under `seed`.
pub fn stream_key(seed: u64, path: &[u64]) -> u64 {
    path.iter().fold(splitmix64(seed), |key, &id| splitmix64(key ^ splitmix64(id.wrapping_add(GOLDEN))))
}

/// Independent generator for `(seed, path...)`.
pub fn stream(seed: u64, path: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_key(seed, path))
}

/// Uniform draw from `[0, 1)` with 53 random bits.
pub fn unit_f64<R: RngCore + ?Sized>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
