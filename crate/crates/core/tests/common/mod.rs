//! Test-only oracles that share no code path with the library's counters.

#![allow(dead_code)]

use motif4::{Graph, VertexId};

/// Template edge lists on vertices 0..4, in motif order 1..=6.
const TEMPLATES: [&[(usize, usize)]; 6] = [
    &[(0, 1), (0, 2), (0, 3)],
    &[(0, 1), (1, 2), (2, 3)],
    &[(0, 1), (1, 2), (2, 0), (0, 3)],
    &[(0, 1), (1, 2), (2, 3), (3, 0)],
    &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
    &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
];

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn edge_matrix(edges: &[(usize, usize)]) -> [[bool; 4]; 4] {
    let mut m = [[false; 4]; 4];
    for &(a, b) in edges {
        m[a][b] = true;
        m[b][a] = true;
    }
    m
}

/// Motif number (1..=6) of a graph on vertices 0..4 by brute-force
/// isomorphism against the six templates; `None` if it matches none.
pub fn naive_class(edges: &[(usize, usize)]) -> Option<usize> {
    let target = edge_matrix(edges);
    for (i, t) in TEMPLATES.iter().enumerate() {
        if t.len() != edges.len() {
            continue;
        }
        for p in permutations() {
            let mapped: Vec<(usize, usize)> = t.iter().map(|&(a, b)| (p[a], p[b])).collect();
            if edge_matrix(&mapped) == target {
                return Some(i + 1);
            }
        }
    }
    None
}

/// Edges induced on the 4 vertices `vs`, relabelled to 0..4.
pub fn induced_edges(g: &Graph, vs: [VertexId; 4]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for a in 0..4 {
        for b in a + 1..4 {
            if g.has_edge(vs[a], vs[b]) {
                e.push((a, b));
            }
        }
    }
    e
}

pub fn four_subsets(n: usize) -> impl Iterator<Item = [VertexId; 4]> {
    let v = |i: usize| VertexId(i as u32);
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| {
            (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [v(a), v(b), v(c), v(d)]))
        })
    })
}

/// Induced counts by isomorphism testing every 4-subset.
pub fn oracle_induced(g: &Graph) -> [u64; 6] {
    let mut c = [0u64; 6];
    for vs in four_subsets(g.num_vertices()) {
        if let Some(i) = naive_class(&induced_edges(g, vs)) {
            c[i - 1] += 1;
        }
    }
    c
}

fn spans_and_connected(edges: &[(usize, usize)]) -> bool {
    let mut parent = [0usize, 1, 2, 3];
    fn find(p: &mut [usize; 4], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            x = p[x];
        }
        x
    }
    let mut touched = [false; 4];
    for &(a, b) in edges {
        touched[a] = true;
        touched[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let root = find(&mut parent, 0);
    touched.iter().all(|&t| t) && (1..4).all(|x| find(&mut parent, x) == root)
}

/// Vanilla counts: every connected spanning edge subset of every 4-subset,
/// classified by isomorphism.
pub fn oracle_vanilla(g: &Graph) -> [u64; 6] {
    let mut n = [0u64; 6];
    for vs in four_subsets(g.num_vertices()) {
        let edges = induced_edges(g, vs);
        let m = edges.len();
        for mask in 1u32..(1 << m) {
            if mask.count_ones() < 3 {
                continue;
            }
            let sub: Vec<(usize, usize)> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            if !spans_and_connected(&sub) {
                continue;
            }
            let i = naive_class(&sub).expect("connected 4-vertex graph matches a template");
            n[i - 1] += 1;
        }
    }
    n
}

/// Every undirected 3-path once, as `[t, u, v, w]` with middle edge `(u, v)`
/// in the graph's stored orientation.
pub fn all_three_paths(g: &Graph) -> Vec<[VertexId; 4]> {
    let mut out = Vec::new();
    for &(u, v) in g.edges() {
        for &t in g.neighbors(u) {
            if t == v {
                continue;
            }
            for &w in g.neighbors(v) {
                if w == u || w == t {
                    continue;
                }
                out.push([t, u, v, w]);
            }
        }
    }
    out
}

/// Mean and sample standard deviation.
pub fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

pub fn sample_variance(xs: &[f64]) -> f64 {
    let (_, s) = mean_std(xs);
    s * s
}
