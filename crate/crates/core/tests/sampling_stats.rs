use motif4::generate::{cycle, erdos_renyi, path};
use motif4::{BasicSampler, CenteredSampler, DiscreteDistribution, Graph, RandomSource};
use rand::{Rng, SeedableRng};
use std::collections::HashMap;

/// Upper 0.001 quantile of chi-square with 3 degrees of freedom.
const CHI2_3DF_P001: f64 = 16.266;

#[test]
fn uniform_weights_pass_chi_square() {
    let d = DiscreteDistribution::build(&[1, 1, 1, 1]);
    let mut rng = RandomSource::new(2024);
    let draws = 100_000;
    let mut hits = [0f64; 4];
    for _ in 0..draws {
        hits[d.draw(&mut rng).unwrap()] += 1.0;
    }
    let expected = draws as f64 / 4.0;
    let chi2: f64 = hits.iter().map(|h| (h - expected).powi(2) / expected).sum();
    assert!(chi2 < CHI2_3DF_P001, "chi2 = {chi2}");
}

#[test]
fn frequencies_within_four_sigma_on_random_weights() {
    let mut wr = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for trial in 0..3 {
        let len = wr.random_range(2..40);
        let weights: Vec<u64> = (0..len).map(|_| wr.random_range(0..1000)).collect();
        let d = DiscreteDistribution::build(&weights);
        let total = d.total() as f64;
        let t = 1_000_000;
        let mut hits = vec![0u64; len];
        let mut rng = RandomSource::new(trial);
        for _ in 0..t {
            hits[d.draw(&mut rng).unwrap()] += 1;
        }
        for (i, &w) in weights.iter().enumerate() {
            let p = w as f64 / total;
            let freq = hits[i] as f64 / t as f64;
            if w == 0 {
                assert_eq!(hits[i], 0);
            }
            assert!((freq - p).abs() <= 4.0 * (p / t as f64).sqrt(), "index {i}: {freq} vs {p}");
        }
    }
}

/// Canonical key of an undirected 3-path.
fn key(p: [motif4::VertexId; 4]) -> [u32; 4] {
    let f = p.map(|v| v.0);
    let r = [f[3], f[2], f[1], f[0]];
    f.min(r)
}

fn check_uniform_paths(g: &Graph, draws: u64, seed: u64) {
    let s = BasicSampler::new(g).unwrap();
    let w = s.total() as f64;
    let mut rng = RandomSource::new(seed);
    let mut freq: HashMap<[u32; 4], u64> = HashMap::new();
    for _ in 0..draws {
        let p = s.sample(&mut rng).unwrap();
        if !p.is_triangle() {
            *freq.entry(key(p.path)).or_default() += 1;
        }
    }
    let p = 1.0 / w;
    let sigma = (p * (1.0 - p) / draws as f64).sqrt();
    let mut paths = 0;
    for &(u, v) in g.edges() {
        for &t in g.neighbors(u) {
            for &x in g.neighbors(v) {
                if t == v || x == u || t == x {
                    continue;
                }
                paths += 1;
                let f = *freq.get(&key([t, u, v, x])).unwrap_or(&0) as f64 / draws as f64;
                assert!((f - p).abs() <= 4.0 * sigma, "path {:?}: {f} vs {p}", [t, u, v, x]);
            }
        }
    }
    assert_eq!(freq.len(), paths);
}

#[test]
fn every_three_path_is_equally_likely() {
    check_uniform_paths(&cycle(6), 1_000_000, 1);
    check_uniform_paths(&path(6), 1_000_000, 2);
    // small dense graph with at most 30 3-paths
    let (g, _) = Graph::from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 1)]);
    check_uniform_paths(&g, 1_000_000, 3);
}

#[test]
fn centered_candidates_are_equally_likely() {
    let g = erdos_renyi(8, 0.6, 4);
    let s = CenteredSampler::new(&g).unwrap();
    let lambda = s.total() as f64;
    assert!(lambda > 0.0 && lambda < 60.0, "{lambda}");
    let draws = 1_000_000u64;
    let mut freq: HashMap<[u32; 4], u64> = HashMap::new();
    let mut rng = RandomSource::new(8);
    for _ in 0..draws {
        *freq.entry(s.sample(&mut rng).unwrap().path.map(|v| v.0)).or_default() += 1;
    }
    assert_eq!(freq.len() as f64, lambda);
    let p = 1.0 / lambda;
    let sigma = (p * (1.0 - p) / draws as f64).sqrt();
    for (k, &c) in &freq {
        let f = c as f64 / draws as f64;
        assert!((f - p).abs() <= 4.0 * sigma, "{k:?}: {f} vs {p}");
    }
}
