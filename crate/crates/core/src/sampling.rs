//! Seeded, order-independent sampling.
//!
//! Sample `i` of a run draws from its own ChaCha stream, so results do not
//! depend on how the samples are split across worker threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_RATIONAL_BOUND: u32 = 8;

/// Parameters for a seeded random search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub samples: u64,
    /// Numerator/denominator cap for quaternion components.
    pub rational_bound: u32,
}

impl Sampling {
    pub fn new(seed: u64, samples: u64) -> Self {
        Sampling { seed, samples, rational_bound: DEFAULT_RATIONAL_BOUND }
    }

    pub fn with_bound(mut self, rational_bound: u32) -> Self {
        self.rational_bound = rational_bound;
        self
    }

    pub fn rng(&self, index: u64) -> ChaCha8Rng {
        stream_rng(self.seed, index)
    }
}

pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// How a checker covers its search space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every instance; finite planes only.
    Exhaustive,
    Sampled(Sampling),
}
