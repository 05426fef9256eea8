//! Keyed random substreams.
//!
//! Every random draw in the crate comes from a generator keyed by the run seed
//! plus a tuple of integers (purpose, iteration, particle, replicate, ...).
//! Evaluation order therefore never changes the numbers a run produces.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Purpose tags used as the first key of a substream.
pub mod stream {
    pub const INIT_POSITION: u64 = 1;
    pub const INIT_VELOCITY: u64 = 2;
    pub const STEP: u64 = 3;
    pub const SAMPLE: u64 = 4;
    pub const REPLICATE_SEED: u64 = 5;
    pub const FOLDS: u64 = 6;
    pub const RESTART: u64 = 7;
}

#[inline]
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Mixes a seed and a key tuple into a single 64-bit value.
pub fn derive_seed(seed: u64, keys: &[u64]) -> u64 {
    keys.iter()
        .fold(splitmix64(seed), |h, &k| splitmix64(h ^ splitmix64(k.wrapping_add(0x632B_E59B_D9B4_E019))))
}

/// Generator for the substream `(seed, keys...)`.
pub fn substream(seed: u64, keys: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, keys))
}
