//! Small template graphs and seeded random graph generators used by tests,
//! benchmarks and the `converge`/`compare` experiments.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

fn build(edges: Vec<(u64, u64)>) -> Graph {
    Graph::from_edges(edges).0
}

/// Complete graph on labels `1..=n`.
pub fn complete(n: u64) -> Graph {
    let mut e = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            e.push((a, b));
        }
    }
    build(e)
}

/// Path `1-2-...-n`.
pub fn path(n: u64) -> Graph {
    build((1..n).map(|a| (a, a + 1)).collect())
}

/// Cycle `1-2-...-n-1`.
pub fn cycle(n: u64) -> Graph {
    let mut e: Vec<_> = (1..n).map(|a| (a, a + 1)).collect();
    e.push((n, 1));
    build(e)
}

/// Star with center `0` and leaves `1..=leaves`.
pub fn star(leaves: u64) -> Graph {
    build((1..=leaves).map(|l| (0, l)).collect())
}

/// `pairs` disjoint edges.
pub fn matching(pairs: u64) -> Graph {
    build((0..pairs).map(|i| (2 * i, 2 * i + 1)).collect())
}

/// G(n, p) on labels `0..n`. Isolated vertices do not survive loading.
pub fn erdos_renyi(n: u64, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                e.push((a, b));
            }
        }
    }
    build(e)
}

/// G(n, m): `m` distinct uniform edges on labels `0..n`.
pub fn gnm(n: u64, m: usize, seed: u64) -> Graph {
    assert!(n >= 2);
    let max = n * (n - 1) / 2;
    assert!(m as u64 <= max, "too many edges requested");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut e = Vec::with_capacity(m);
    while e.len() < m {
        let a = rng.random_range(0..n);
        let b = rng.random_range(0..n);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key) {
            e.push(key);
        }
    }
    build(e)
}

/// Preferential attachment: each new vertex links to `per_step` existing
/// vertices chosen proportionally to degree. Produces hubs adjacent to many
/// low-degree vertices.
pub fn preferential_attachment(n: u64, per_step: usize, seed: u64) -> Graph {
    assert!(per_step >= 1 && n as usize > per_step);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = Vec::new();
    // endpoint multiset; sampling from it is degree-proportional
    let mut ends: Vec<u64> = Vec::new();
    let seed_size = per_step as u64 + 1;
    for a in 0..seed_size {
        for b in a + 1..seed_size {
            e.push((a, b));
            ends.push(a);
            ends.push(b);
        }
    }
    for v in seed_size..n {
        let mut targets = Vec::with_capacity(per_step);
        while targets.len() < per_step {
            let t = ends[rng.random_range(0..ends.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for t in targets {
            e.push((t, v));
            ends.push(t);
            ends.push(v);
        }
    }
    build(e)
}
