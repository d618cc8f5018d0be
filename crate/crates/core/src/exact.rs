//! Exact motif counts: an exhaustive 4-subset enumerator for small graphs and
//! a fast counter for large ones.
//!
//! The fast counter gets the vanilla 3-star, 3-path and tailed-triangle
//! counts from degrees and triangles, and the induced cycle-based counts by
//! walking every centered-sampler candidate. The conversion matrix fills in
//! the rest.

use crate::basic::build_basic_weights;
use crate::centered::build_centered_weights;
use crate::error::{MotifError, Result};
use crate::graph::Graph;
use crate::motif::{
    classify_pairs, induced_to_vanilla, star_count, Motif, MotifClass, MotifCounts,
};

pub const DEFAULT_BRUTE_FORCE_CAP: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactCounts {
    pub induced: MotifCounts,
    pub vanilla: MotifCounts,
    pub triangles: u64,
}

/// Classifies every 4-subset. Refuses graphs with more than `cap` vertices.
pub fn brute_force_counts(g: &Graph, cap: usize) -> Result<ExactCounts> {
    let n = g.num_vertices();
    if n > cap {
        return Err(MotifError::BruteForceCap { n, cap });
    }
    let mut adj = vec![false; n * n];
    for &(a, b) in g.edges() {
        adj[a.index() * n + b.index()] = true;
        adj[b.index() * n + a.index()] = true;
    }
    let has = |a: usize, b: usize| adj[a * n + b];

    let mut triangles = 0u64;
    let mut induced = [0u64; 6];
    for a in 0..n {
        for b in a + 1..n {
            let ab = has(a, b);
            for c in b + 1..n {
                let (ac, bc) = (has(a, c), has(b, c));
                if ab && ac && bc {
                    triangles += 1;
                }
                for d in c + 1..n {
                    let present = [ab, ac, has(a, d), bc, has(b, d), has(c, d)];
                    if let MotifClass::Motif(m) = classify_pairs(present) {
                        induced[m.slot()] += 1;
                    }
                }
            }
        }
    }
    let induced = MotifCounts::induced(induced);
    let vanilla = induced_to_vanilla(&induced)?;
    Ok(ExactCounts { induced, vanilla, triangles })
}

/// Triangle count and vanilla tailed-triangle count.
///
/// Each triangle `a ≺ b ≺ c` is found once from its edge `(a, b)` by
/// intersecting the parts of both adjacency lists above `b`.
pub fn triangles_and_tailed(g: &Graph) -> Result<(u64, u64)> {
    let mut triangles = 0u64;
    let mut tailed = 0u64;
    for &(a, b) in g.edges() {
        let adj_a = g.neighbors(a);
        let adj_b = g.neighbors(b);
        let mut i = g.suffix_start(adj_a, b);
        let mut j = g.suffix_start(adj_b, b);
        while i < adj_a.len() && j < adj_b.len() {
            let (x, y) = (adj_a[i], adj_b[j]);
            match g.order_key(x).cmp(&g.order_key(y)) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    triangles += 1;
                    let tails = (g.degree(a) + g.degree(b) + g.degree(x) - 6) as u64;
                    tailed = tailed.checked_add(tails).ok_or(MotifError::Overflow("tailed triangles"))?;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    Ok((triangles, tailed))
}

/// Result of walking every centered-sampler candidate outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CenteredTally {
    /// Candidate `(edge, u', v')` tuples visited; equals `Λ`.
    pub visited: u64,
    /// Centered 3-paths found, by motif slot (only slots 3..=5 are used).
    pub centered: [u64; 6],
}

pub fn enumerate_centered(g: &Graph) -> Result<CenteredTally> {
    let weights = build_centered_weights(g)?;
    let mut tally = CenteredTally::default();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (lu, lv) = weights.suffix[e];
        if lu == 0 || lv == 0 {
            continue;
        }
        let adj_u = g.neighbors(u);
        let adj_v = g.neighbors(v);
        let above_v = &adj_u[adj_u.len() - lu as usize..];
        let above_u = &adj_v[adj_v.len() - lv as usize..];
        tally.visited += lu as u64 * lv as u64;
        for &t in above_v {
            for &w in above_u {
                if t == w || !g.has_edge(t, w) {
                    continue;
                }
                let chords = g.has_edge(t, v) as u8 + g.has_edge(u, w) as u8;
                let m = match chords {
                    0 => Motif::FourCycle,
                    1 => Motif::ChordalFourCycle,
                    _ => Motif::FourClique,
                };
                tally.centered[m.slot()] += 1;
            }
        }
    }
    Ok(tally)
}

/// Exact counts for large graphs.
pub fn fast_exact_counts(g: &Graph) -> Result<ExactCounts> {
    let n1 = star_count(g)? as i128;
    let w = build_basic_weights(g)?.total as i128;
    let (triangles, n3) = triangles_and_tailed(g)?;
    let n2 = w - 3 * triangles as i128;
    if n2 < 0 {
        return Err(MotifError::Inconsistent("W < 3T".into()));
    }
    let n3 = n3 as i128;

    let tally = enumerate_centered(g)?;
    let clique_paths = tally.centered[Motif::FourClique.slot()];
    if clique_paths % 3 != 0 {
        return Err(MotifError::Inconsistent(format!(
            "{clique_paths} centered paths in 4-cliques is not a multiple of 3"
        )));
    }
    let c6 = (clique_paths / 3) as i128;
    let c5 = tally.centered[Motif::ChordalFourCycle.slot()] as i128;
    let c4 = tally.centered[Motif::FourCycle.slot()] as i128;
    let c3 = n3 - 4 * c5 - 12 * c6;
    let c2 = n2 - 2 * c3 - 4 * c4 - 6 * c5 - 12 * c6;
    let c1 = n1 - c3 - 2 * c5 - 4 * c6;

    let mut induced = [0u64; 6];
    for (slot, c) in [c1, c2, c3, c4, c5, c6].into_iter().enumerate() {
        if c < 0 {
            return Err(MotifError::Inconsistent(format!("negative induced count for motif {}", slot + 1)));
        }
        induced[slot] = u64::try_from(c).map_err(|_| MotifError::Overflow("induced counts"))?;
    }
    let induced = MotifCounts::induced(induced);
    let vanilla = induced_to_vanilla(&induced)?;
    Ok(ExactCounts { induced, vanilla, triangles })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::*;

    #[test]
    fn brute_force_templates() {
        let k4 = brute_force_counts(&complete(4), DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(k4.induced.values, [0, 0, 0, 0, 0, 1]);
        assert_eq!(k4.vanilla.values, [4, 12, 12, 3, 6, 1]);
        assert_eq!(k4.triangles, 4);

        let c4 = brute_force_counts(&cycle(4), DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(c4.induced.values, [0, 0, 0, 1, 0, 0]);
        assert_eq!(c4.vanilla.values, [0, 4, 0, 1, 0, 0]);

        let p = brute_force_counts(&path(4), DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(p.induced.values, [0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn brute_force_cap_is_enforced() {
        let g = path(12);
        match brute_force_counts(&g, 10) {
            Err(MotifError::BruteForceCap { n, cap }) => assert_eq!((n, cap), (12, 10)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn fast_counts_on_k4() {
        let e = fast_exact_counts(&complete(4)).unwrap();
        assert_eq!(e.triangles, 4);
        assert_eq!(e.vanilla.values[1], 12);
        assert_eq!(e.vanilla.values[2], 12);
        assert_eq!(e.induced.values, [0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn triangle_free_graphs() {
        for g in [cycle(6), path(7), star(5), gnm(30, 40, 2)] {
            let e = fast_exact_counts(&g).unwrap();
            if e.triangles > 0 {
                continue;
            }
            let w = build_basic_weights(&g).unwrap().total;
            assert_eq!(e.vanilla.values[1], w);
            assert_eq!(e.vanilla.values[2], 0);
            assert_eq!(e.induced.values[4], 0);
            assert_eq!(e.induced.values[5], 0);
        }
    }

    #[test]
    fn fast_matches_brute_on_a_few_graphs() {
        for seed in 0..10 {
            let g = erdos_renyi(18, 0.1 + 0.08 * seed as f64, seed);
            assert_eq!(fast_exact_counts(&g).unwrap(), brute_force_counts(&g, 200).unwrap());
        }
    }

    #[test]
    fn enumeration_visits_lambda_tuples() {
        let g = erdos_renyi(40, 0.2, 9);
        let tally = enumerate_centered(&g).unwrap();
        assert_eq!(tally.visited, build_centered_weights(&g).unwrap().total);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::from_edges(std::iter::empty()).0;
        let e = fast_exact_counts(&g).unwrap();
        assert_eq!(e.induced.values, [0; 6]);
        assert_eq!(brute_force_counts(&g, 200).unwrap(), e);
    }
}
