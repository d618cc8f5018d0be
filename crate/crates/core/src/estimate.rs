//! Sampler output shared by the basic and centered samplers.

use serde::{Deserialize, Serialize};

use crate::error::{MotifError, Result};
use crate::graph::VertexId;
use crate::motif::{Motif, MotifClass};
use crate::sampling::{partition, RandomSource};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SamplerKind {
    Basic,
    Centered,
}

/// Outcome of one sampling trial: the walk `path[0]-path[1]-path[2]-path[3]`
/// with middle edge `(path[1], path[2])`. When `path[0] == path[3]` the trial
/// produced a triangle and the class is `NotConnected4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathSample {
    pub path: [VertexId; 4],
    pub class: MotifClass,
}

impl PathSample {
    pub fn edges(&self) -> [(VertexId, VertexId); 3] {
        let p = self.path;
        [(p[0], p[1]), (p[1], p[2]), (p[2], p[3])]
    }

    pub fn is_triangle(&self) -> bool {
        self.path[0] == self.path[3]
    }
}

/// Sampling parameters shared by both samplers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SampleConfig {
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
}

impl SampleConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        SampleConfig { samples, seed, workers: 1 }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

/// Point estimates with the raw success counts and scales needed for error bars.
#[derive(Debug, Clone, PartialEq)]
pub struct Estimate {
    pub sampler: SamplerKind,
    /// Number of trials `k`.
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    /// `W` for the basic sampler, `Λ` for the centered one.
    pub normalizer: u128,
    /// Vanilla 3-star count, basic sampler only.
    pub star_vanilla: Option<u64>,
    /// Success counts by motif slot; slots outside the sampler's range stay 0.
    pub counts: [u64; 6],
    /// Point estimates by motif slot; `None` outside the sampler's range.
    pub values: [Option<f64>; 6],
    /// Scale `K_i` with `estimate = count/k · K_i`; `None` for derived or absent motifs.
    pub scales: [Option<f64>; 6],
}

impl Estimate {
    pub fn value(&self, m: Motif) -> Option<f64> {
        self.values[m.slot()]
    }

    pub fn count(&self, m: Motif) -> u64 {
        self.counts[m.slot()]
    }

    pub fn scale(&self, m: Motif) -> Option<f64> {
        self.scales[m.slot()]
    }

    /// Motifs this sampler reports.
    pub fn motifs(&self) -> impl Iterator<Item = Motif> + '_ {
        Motif::ALL.into_iter().filter(|m| self.values[m.slot()].is_some())
    }
}

/// Runs `trial_batch(n, rng)` on each worker's share of `config.samples`
/// with stream `j` for worker `j`, then sums the per-motif tallies.
pub(crate) fn run_partitioned<F>(config: &SampleConfig, trial_batch: F) -> Result<[u64; 6]>
where
    F: Fn(u64, &mut RandomSource) -> Result<[u64; 6]> + Sync,
{
    if config.samples == 0 {
        return Err(MotifError::Usage("sample count k must be at least 1".into()));
    }
    let shares = partition(config.samples, config.workers);
    if shares.len() == 1 {
        return trial_batch(shares[0], &mut RandomSource::stream(config.seed, 0));
    }
    let results: Vec<Result<[u64; 6]>> = std::thread::scope(|s| {
        let handles: Vec<_> = shares
            .iter()
            .enumerate()
            .map(|(j, &share)| {
                let f = &trial_batch;
                s.spawn(move || f(share, &mut RandomSource::stream(config.seed, j as u64)))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("sampler worker panicked")).collect()
    });
    let mut total = [0u64; 6];
    for r in results {
        let counts = r?;
        for (t, c) in total.iter_mut().zip(counts) {
            *t += c;
        }
    }
    Ok(total)
}
