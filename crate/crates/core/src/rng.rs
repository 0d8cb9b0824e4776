//! Deterministic random streams.
//!
//! Every trial owns its own generator, derived from the master seed and a
//! key that names the unit of work (sweep size and trial index, game-matrix
//! cell and trial, ...). The master seed picks the ChaCha key; the work key is
//! folded into the 64-bit stream id. Two different keys never share a stream,
//! and the assignment of trials to threads has no effect on the draws.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Folds a multi-part key into a single stream id.
pub fn stream_id(key: &[u64]) -> u64 {
    key.iter()
        .fold(GOLDEN, |acc, &k| splitmix(acc ^ splitmix(k)))
}

/// Generator for the unit of work identified by `key` under `master_seed`.
pub fn stream(master_seed: u64, key: &[u64]) -> StreamRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(stream_id(key));
    rng
}
