//! Centered 3-path sampling for the cycle-based motifs (4-cycle,
//! chordal 4-cycle, 4-clique).
//!
//! A 3-path `t-u-v-w` is centered when `v ≺ t`, `u ≺ w` and `(t, w)` is an
//! edge. Each induced 4-cycle and chordal 4-cycle holds exactly one centered
//! 3-path and each 4-clique holds three. Restricting the endpoint draws to
//! the `≺`-suffixes shrinks the candidate space from `W` to
//! `Λ = Σ_e L_{u,v}·L_{v,u}` while keeping every centered path at
//! probability `1 / Λ`.

use crate::error::{MotifError, Result};
use crate::estimate::{run_partitioned, Estimate, PathSample, SampleConfig, SamplerKind};
use crate::graph::{Graph, VertexId};
use crate::motif::{classify_path, Motif, MotifClass};
use crate::sampling::{DiscreteDistribution, RandomSource};

/// Centered 3-paths per induced copy of a cycle-based motif.
pub fn centered_paths_in(motif: Motif) -> Option<u64> {
    match motif {
        Motif::FourCycle | Motif::ChordalFourCycle => Some(1),
        Motif::FourClique => Some(3),
        _ => None,
    }
}

/// Per-edge candidate counts, aligned with [`Graph::edges`]. For edge
/// `(u, v)`, `suffix[e] = (L_{u,v}, L_{v,u})` and `lambda[e]` is their product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenteredWeights {
    pub lambda: Vec<u64>,
    pub suffix: Vec<(u32, u32)>,
    pub total: u64,
}

pub fn build_centered_weights(g: &Graph) -> Result<CenteredWeights> {
    let m = g.num_edges();
    let mut lambda = Vec::with_capacity(m);
    let mut suffix = Vec::with_capacity(m);
    let mut total = 0u64;
    for &(u, v) in g.edges() {
        let lu = g.suffix_count(u, v);
        let lv = g.suffix_count(v, u);
        let l = (lu as u64).checked_mul(lv as u64).ok_or(MotifError::Overflow("lambda"))?;
        total = total.checked_add(l).ok_or(MotifError::Overflow("Lambda"))?;
        lambda.push(l);
        suffix.push((lu as u32, lv as u32));
    }
    Ok(CenteredWeights { lambda, suffix, total })
}

/// Def. of a centered 3-path applied to `p.path = [t, u, v, w]`.
pub fn is_centered(g: &Graph, p: &PathSample) -> bool {
    let [t, u, v, w] = p.path;
    let distinct = t != u && t != v && t != w && u != v && u != w && v != w;
    distinct && g.order_less(v, t) && g.order_less(u, w) && g.has_edge(t, w)
}

/// Cycle-based motif of a closed 4-cycle `t-u-v-w-t` by its chord count.
#[inline]
fn classify_cycle(g: &Graph, t: VertexId, u: VertexId, v: VertexId, w: VertexId) -> Motif {
    match g.has_edge(t, v) as u8 + g.has_edge(u, w) as u8 {
        0 => Motif::FourCycle,
        1 => Motif::ChordalFourCycle,
        _ => Motif::FourClique,
    }
}

#[derive(Debug, Clone)]
pub struct CenteredSampler<'g> {
    graph: &'g Graph,
    weights: CenteredWeights,
    dist: DiscreteDistribution,
}

impl<'g> CenteredSampler<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        let weights = build_centered_weights(graph)?;
        let dist = DiscreteDistribution::build(&weights.lambda);
        Ok(CenteredSampler { graph, weights, dist })
    }

    pub fn weights(&self) -> &CenteredWeights {
        &self.weights
    }

    /// `Λ`.
    pub fn total(&self) -> u64 {
        self.weights.total
    }

    #[inline]
    fn draw_candidate(&self, rng: &mut RandomSource) -> Result<[VertexId; 4]> {
        let e = self.dist.draw(rng).map_err(|_| MotifError::NoCandidates)?;
        let (u, v) = self.graph.edges()[e];
        let (lu, lv) = self.weights.suffix[e];
        let adj_u = self.graph.neighbors(u);
        let adj_v = self.graph.neighbors(v);
        let u2 = adj_u[adj_u.len() - lu as usize + rng.below(lu as usize)];
        let v2 = adj_v[adj_v.len() - lv as usize + rng.below(lv as usize)];
        Ok([u2, u, v, v2])
    }

    /// Draws one candidate outcome. It may be a triangle or a 3-path that
    /// is not centered; the class is that of the induced vertex set.
    pub fn sample(&self, rng: &mut RandomSource) -> Result<PathSample> {
        let path = self.draw_candidate(rng)?;
        let [a, b, c, d] = path;
        let class = if a == d {
            MotifClass::NotConnected4
        } else {
            MotifClass::Motif(classify_path(self.graph, a, b, c, d))
        };
        Ok(PathSample { path, class })
    }

    fn tally(&self, trials: u64, rng: &mut RandomSource) -> Result<[u64; 6]> {
        let mut counts = [0u64; 6];
        for _ in 0..trials {
            let [t, u, v, w] = self.draw_candidate(rng)?;
            // the suffix draws already give v ≺ t and u ≺ w
            if t != w && self.graph.has_edge(t, w) {
                counts[classify_cycle(self.graph, t, u, v, w).slot()] += 1;
            }
        }
        Ok(counts)
    }

    /// Estimates induced counts of motifs 4..=6.
    pub fn estimate(&self, config: &SampleConfig) -> Result<Estimate> {
        if config.samples == 0 {
            return Err(MotifError::Usage("sample count k must be at least 1".into()));
        }
        let lambda = self.weights.total;
        let counts = if lambda == 0 {
            [0u64; 6]
        } else {
            run_partitioned(config, |n, rng| self.tally(n, rng))?
        };
        let k = config.samples as f64;
        let mut values = [None; 6];
        let mut scales = [None; 6];
        for m in [Motif::FourCycle, Motif::ChordalFourCycle, Motif::FourClique] {
            let scale = lambda as f64 / centered_paths_in(m).unwrap() as f64;
            scales[m.slot()] = Some(scale);
            values[m.slot()] = Some(counts[m.slot()] as f64 / k * scale);
        }
        Ok(Estimate {
            sampler: SamplerKind::Centered,
            samples: config.samples,
            seed: config.seed,
            workers: config.workers,
            normalizer: lambda as u128,
            star_vanilla: None,
            counts,
            values,
            scales,
        })
    }
}

pub fn sample_centered(g: &Graph, rng: &mut RandomSource) -> Result<PathSample> {
    CenteredSampler::new(g)?.sample(rng)
}

pub fn estimate_centered(g: &Graph, config: &SampleConfig) -> Result<Estimate> {
    CenteredSampler::new(g)?.estimate(config)
}
