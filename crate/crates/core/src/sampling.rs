//! Seedable randomness and constant-time draws from a fixed integer-weighted
//! distribution over edge indices.

use rand::distr::Distribution;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::weighted::WeightedAliasIndex;

use crate::error::{MotifError, Result};

/// Deterministic random stream. Streams derived from the same seed with
/// different indices are independent.
#[derive(Debug, Clone)]
pub struct RandomSource {
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self::stream(seed, 0)
    }

    pub fn stream(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        RandomSource { rng }
    }

    /// Uniform integer in `0..n`; `n` must be positive.
    #[inline]
    pub fn below(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }
}

impl RngCore for RandomSource {
    fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    fn fill_bytes(&mut self, dst: &mut [u8]) {
        self.rng.fill_bytes(dst)
    }
}

#[derive(Debug, Clone)]
enum AliasTable {
    Empty,
    Narrow(WeightedAliasIndex<u64>),
    Wide(WeightedAliasIndex<u128>),
}

/// Alias-method sampler over indices `0..weights.len()`; index `i` is drawn
/// with probability exactly `weights[i] / total`.
#[derive(Debug, Clone)]
pub struct DiscreteDistribution {
    total: u128,
    len: usize,
    table: AliasTable,
}

impl DiscreteDistribution {
    /// Builds the alias tables in O(len). All-zero (or empty) weights give an
    /// empty distribution that refuses draws.
    pub fn build(weights: &[u64]) -> Self {
        let total: u128 = weights.iter().map(|&w| w as u128).sum();
        let len = weights.len();
        if total == 0 {
            return DiscreteDistribution { total, len, table: AliasTable::Empty };
        }
        // the alias table scales every weight by len and needs the result in range
        let narrow_cap = u64::MAX / len as u64;
        let table = if weights.iter().all(|&w| w <= narrow_cap) && total <= u64::MAX as u128 {
            AliasTable::Narrow(WeightedAliasIndex::new(weights.to_vec()).expect("valid weights"))
        } else {
            let wide: Vec<u128> = weights.iter().map(|&w| w as u128).collect();
            AliasTable::Wide(WeightedAliasIndex::new(wide).expect("valid weights"))
        };
        DiscreteDistribution { total, len, table }
    }

    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Draws one index. Errors on an empty distribution.
    #[inline]
    pub fn draw<R: RngCore + ?Sized>(&self, rng: &mut R) -> Result<usize> {
        match &self.table {
            AliasTable::Empty => Err(MotifError::EmptyDistribution),
            AliasTable::Narrow(t) => Ok(t.sample(rng)),
            AliasTable::Wide(t) => Ok(t.sample(rng)),
        }
    }
}

/// Splits `k` trials over `workers` as evenly as possible, earlier workers
/// taking the remainder.
pub fn partition(k: u64, workers: usize) -> Vec<u64> {
    let w = workers.max(1) as u64;
    (0..w).map(|j| k / w + u64::from(j < k % w)).collect()
}
