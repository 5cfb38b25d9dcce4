//! Seeded, splittable random source.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; used to derive child seeds and hash permutations.
#[inline]
pub(crate) fn mix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A reproducible random stream backed by ChaCha8.
///
/// Independent streams for parallel work are obtained with [`RandomSource::child`],
/// which depends only on `(seed, index)` and never on the parent's consumed state.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self { seed, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn child(&self, index: u64) -> RandomSource {
        RandomSource::new(mix64(mix64(self.seed) ^ mix64(index.wrapping_add(0x5851_F42D_4C95_7F2D))))
    }

    /// Uniform integer in `0..bound`. `bound` must be positive.
    #[inline]
    pub fn below(&mut self, bound: usize) -> usize {
        use rand::Rng;
        self.rng.gen_range(0..bound)
    }

    /// Uniform real in `[0, 1)`.
    #[inline]
    pub fn unit(&mut self) -> f64 {
        use rand::Rng;
        self.rng.gen::<f64>()
    }

    /// Uniformly random unordered pair `i < j` of distinct indices in `0..n` (`n >= 2`).
    #[inline]
    pub fn distinct_pair(&mut self, n: usize) -> (usize, usize) {
        let i = self.below(n);
        let mut j = self.below(n - 1);
        if j >= i {
            j += 1;
        }
        if i < j {
            (i, j)
        } else {
            (j, i)
        }
    }
}

impl RngCore for RandomSource {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.rng.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), rand::Error> {
        self.rng.try_fill_bytes(dest)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = RandomSource::new(7);
        let mut b = RandomSource::new(7);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn child_ignores_parent_state() {
        let a = RandomSource::new(11);
        let mut b = RandomSource::new(11);
        b.next_u64();
        assert_eq!(a.child(3).next_u64(), b.child(3).next_u64());
        assert_ne!(a.child(3).next_u64(), a.child(4).next_u64());
        assert_ne!(a.child(0).next_u64(), RandomSource::new(11).next_u64());
    }

    #[test]
    fn distinct_pair_covers_all_pairs_uniformly() {
        let mut rng = RandomSource::new(5);
        let mut counts = [[0usize; 4]; 4];
        let trials = 60_000;
        for _ in 0..trials {
            let (i, j) = rng.distinct_pair(4);
            assert!(i < j);
            counts[i][j] += 1;
        }
        let p = 1.0 / 6.0;
        let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
        for i in 0..4 {
            for j in i + 1..4 {
                assert!((counts[i][j] as f64 - trials as f64 * p).abs() < 3.0 * sigma);
            }
        }
    }
}
