//! Counter-based seeding for reproducible parallel Monte Carlo.
//!
//! Every random task owns a `SeedSpec`. The master seed picks the ChaCha key,
//! the stream index picks the ChaCha stream, so distinct `(master, stream)`
//! pairs give independent generators and the same pair is bit-reproducible
//! regardless of thread count or evaluation order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedSpec {
    pub master_seed: u64,
    pub stream_index: u64,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(GOLDEN);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SeedSpec {
    pub fn new(master_seed: u64, stream_index: u64) -> Self {
        Self { master_seed, stream_index }
    }

    /// Derive a sub-stream for task `task` (sample index, path index, ...).
    ///
    /// Fixed mixing function so parallel tasks never share a stream and the
    /// derivation is independent of scheduling order.
    pub fn child(&self, task: u64) -> SeedSpec {
        let mut s = self
            .stream_index
            .wrapping_add(GOLDEN.wrapping_mul(task.wrapping_add(1)));
        SeedSpec {
            master_seed: self.master_seed,
            stream_index: splitmix64(&mut s),
        }
    }

    /// Instantiate the generator for this stream.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut key = [0u8; 32];
        let mut s = self.master_seed;
        for chunk in key.chunks_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut s).to_le_bytes());
        }
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(self.stream_index);
        rng
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::RngCore;

    #[test]
    fn same_spec_same_stream() {
        let a: Vec<u64> = (0..32).map(|_| SeedSpec::new(7, 3).rng().next_u64()).collect();
        let mut rng = SeedSpec::new(7, 3).rng();
        // repeated fresh generators agree with a single generator's first word
        assert!(a.iter().all(|&w| w == a[0]));
        assert_eq!(rng.next_u64(), a[0]);
    }

    #[test]
    fn distinct_streams_differ() {
        let mut r0 = SeedSpec::new(7, 0).rng();
        let mut r1 = SeedSpec::new(7, 1).rng();
        let w0: Vec<u64> = (0..8).map(|_| r0.next_u64()).collect();
        let w1: Vec<u64> = (0..8).map(|_| r1.next_u64()).collect();
        assert_ne!(w0, w1);
    }

    #[test]
    fn children_are_distinct_and_reproducible() {
        let base = SeedSpec::new(42, 5);
        let a = base.child(0);
        let b = base.child(1);
        assert_ne!(a.stream_index, b.stream_index);
        assert_eq!(a, base.child(0));
    }
}
