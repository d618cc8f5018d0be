//! Uniform 3-path sampling and the estimator built on it.
//!
//! The middle edge `(u, v)` is drawn with probability `τ_e / W` where
//! `τ_e = (d_u - 1)(d_v - 1)`, then one neighbor of each endpoint is drawn
//! uniformly, excluding the other endpoint. Every 3-path of the graph comes
//! out with probability exactly `1 / W`; the rest of the outcome space is
//! triangles. A motif with `A[2][i]` 3-paths is therefore hit with
//! probability `A[2][i]·C_i / W`.

use crate::error::{MotifError, Result};
use crate::estimate::{run_partitioned, Estimate, PathSample, SampleConfig, SamplerKind};
use crate::graph::{Graph, VertexId};
use crate::motif::{classify_path, star_count, three_paths_in, Motif, MotifClass, CONVERSION};
use crate::sampling::{DiscreteDistribution, RandomSource};

/// Per-edge 3-path multiplicities, aligned with [`Graph::edges`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicWeights {
    pub tau: Vec<u64>,
    pub total: u64,
}

pub fn build_basic_weights(g: &Graph) -> Result<BasicWeights> {
    let mut total = 0u64;
    let tau = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let t = (g.degree(u) as u64 - 1)
                .checked_mul(g.degree(v) as u64 - 1)
                .ok_or(MotifError::Overflow("tau"))?;
            total = total.checked_add(t).ok_or(MotifError::Overflow("W"))?;
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BasicWeights { tau, total })
}

/// Preprocessed state for repeated 3-path sampling on one graph.
#[derive(Debug, Clone)]
pub struct BasicSampler<'g> {
    graph: &'g Graph,
    weights: BasicWeights,
    dist: DiscreteDistribution,
    star_vanilla: u64,
}

impl<'g> BasicSampler<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let weights = build_basic_weights(graph)?;
        let dist = DiscreteDistribution::build(&weights.tau);
        let star_vanilla = star_count(graph)?;
        Ok(BasicSampler { graph, weights, dist, star_vanilla })
    }

    pub fn weights(&self) -> &BasicWeights {
        &self.weights
    }

    /// `W`.
    pub fn total(&self) -> u64 {
        self.weights.total
    }

    pub fn star_vanilla(&self) -> u64 {
        self.star_vanilla
    }

    /// Draws one 3-path (or triangle). Fails with `NoPaths` when `W = 0`.
    pub fn sample(&self, rng: &mut RandomSource) -> Result<PathSample> {
        let e = self.dist.draw(rng).map_err(|_| MotifError::NoPaths)?;
        let (u, v) = self.graph.edges()[e];
        let u2 = other_neighbor(self.graph, u, v, rng);
        let v2 = other_neighbor(self.graph, v, u, rng);
        let class = if u2 == v2 {
            MotifClass::NotConnected4
        } else {
            MotifClass::Motif(classify_path(self.graph, u2, u, v, v2))
        };
        Ok(PathSample { path: [u2, u, v, v2], class })
    }

    fn tally(&self, trials: u64, rng: &mut RandomSource) -> Result<[u64; 6]> {
        let mut counts = [0u64; 6];
        for _ in 0..trials {
            if let MotifClass::Motif(m) = self.sample(rng)?.class {
                counts[m.slot()] += 1;
            }
        }
        Ok(counts)
    }

    /// Estimates all six induced counts from `config.samples` trials.
    /// Motifs 2..=6 are scaled sample frequencies; motif 1 follows from the
    /// exact vanilla 3-star count through the first row of the conversion matrix.
    pub fn estimate(&self, config: &SampleConfig) -> Result<Estimate> {
        if config.samples == 0 {
            return Err(MotifError::Usage("sample count k must be at least 1".into()));
        }
        let w = self.weights.total;
        let counts = if w == 0 {
            [0u64; 6]
        } else {
            run_partitioned(config, |n, rng| self.tally(n, rng))?
        };
        let k = config.samples as f64;
        let mut values = [None; 6];
        let mut scales = [None; 6];
        for m in &Motif::ALL[1..] {
            let scale = w as f64 / three_paths_in(*m) as f64;
            scales[m.slot()] = Some(scale);
            values[m.slot()] = Some(counts[m.slot()] as f64 / k * scale);
        }
        let row = CONVERSION[0];
        let mut star = self.star_vanilla as f64;
        for m in &Motif::ALL[1..] {
            star -= row[m.slot()] as f64 * values[m.slot()].unwrap();
        }
        values[Motif::ThreeStar.slot()] = Some(star);
        Ok(Estimate {
            sampler: SamplerKind::Basic,
            samples: config.samples,
            seed: config.seed,
            workers: config.workers,
            normalizer: w as u128,
            star_vanilla: Some(self.star_vanilla),
            counts,
            values,
            scales,
        })
    }
}

/// Uniform neighbor of `u` other than `v`, by rejection. Needs `d_u ≥ 2`.
#[inline]
fn other_neighbor(g: &Graph, u: VertexId, v: VertexId, rng: &mut RandomSource) -> VertexId {
    let adj = g.neighbors(u);
    debug_assert!(adj.len() >= 2);
    loop {
        let x = adj[rng.below(adj.len())];
        if x != v {
            return x;
        }
    }
}

/// One-shot draw of a single 3-path.
pub fn sample_three_path(g: &Graph, rng: &mut RandomSource) -> Result<PathSample> {
    BasicSampler::new(g)?.sample(rng)
}

/// Convenience wrapper: preprocess and estimate in one call.
pub fn estimate_basic(g: &Graph, config: &SampleConfig) -> Result<Estimate> {
    BasicSampler::new(g)?.estimate(config)
}
