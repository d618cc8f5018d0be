//! Immutable undirected simple graph in compressed adjacency form.
//!
//! Every adjacency list is sorted by [`OrderKey`], the `(degree, id)` total
//! order used by the centered sampler. Both the suffix queries of the
//! centered sampler and edge tests reduce to binary searches on these lists.

use std::io::{BufRead, Write};

use crate::error::{MotifError, Result};

/// Dense vertex identifier in `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Sort key defining the vertex order: lower degree first, ties by id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderKey {
    pub degree: u32,
    pub id: u32,
}

/// What the loader discarded while building the graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadSummary {
    pub lines: usize,
    pub comments: usize,
    pub self_loops: usize,
    pub duplicate_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    adjacency: Vec<VertexId>,
    /// Each edge once, stored as `(a, b)` with `a ≺ b`, sorted by dense id.
    edges: Vec<(VertexId, VertexId)>,
    /// Original label of each dense id, ascending.
    labels: Vec<u64>,
}

impl Graph {
    /// Builds a graph from labelled endpoint pairs. Self-loops are dropped and
    /// repeated or reversed edges are merged. Labels are remapped densely in
    /// ascending label order, so the result does not depend on input order.
    pub fn from_edges<I>(pairs: I) -> (Graph, LoadSummary)
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut summary = LoadSummary::default();
        let mut raw: Vec<(u64, u64)> = Vec::new();
        for (a, b) in pairs {
            if a == b {
                summary.self_loops += 1;
                continue;
            }
            raw.push(if a < b { (a, b) } else { (b, a) });
        }

        let mut labels: Vec<u64> = raw.iter().flat_map(|&(a, b)| [a, b]).collect();
        labels.sort_unstable();
        labels.dedup();
        assert!(labels.len() <= u32::MAX as usize, "vertex count exceeds u32 range");

        let dense = |label: u64| -> u32 {
            labels.binary_search(&label).expect("label present") as u32
        };
        let mut pairs: Vec<(u32, u32)> = raw.iter().map(|&(a, b)| (dense(a), dense(b))).collect();
        drop(raw);
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        summary.duplicate_edges = before - pairs.len();

        let n = labels.len();
        let mut degree = vec![0usize; n];
        for &(a, b) in &pairs {
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0usize);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adjacency = vec![VertexId(0); offsets[n]];
        for &(a, b) in &pairs {
            adjacency[fill[a as usize]] = VertexId(b);
            fill[a as usize] += 1;
            adjacency[fill[b as usize]] = VertexId(a);
            fill[b as usize] += 1;
        }

        let key = |v: VertexId| OrderKey { degree: degree[v.index()] as u32, id: v.0 };
        for v in 0..n {
            adjacency[offsets[v]..offsets[v + 1]].sort_unstable_by_key(|&x| key(x));
        }

        let edges = pairs
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (VertexId(a), VertexId(b));
                if key(a) < key(b) {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();

        (Graph { offsets, adjacency, edges, labels }, summary)
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v.index() + 1] - self.offsets[v.index()]
    }

    /// Neighbors of `v`, ascending by [`OrderKey`].
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[self.offsets[v.index()]..self.offsets[v.index() + 1]]
    }

    /// Edges as `(a, b)` with `a ≺ b`.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.labels.len() as u32).map(VertexId)
    }

    /// Original input label of a dense vertex id.
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v.index()]
    }

    /// Dense id of an original label, if the label occurs in the graph.
    pub fn vertex_of_label(&self, label: u64) -> Option<VertexId> {
        self.labels.binary_search(&label).ok().map(|i| VertexId(i as u32))
    }

    #[inline]
    pub fn order_key(&self, v: VertexId) -> OrderKey {
        OrderKey { degree: self.degree(v) as u32, id: v.0 }
    }

    /// `u ≺ v`.
    #[inline]
    pub fn order_less(&self, u: VertexId, v: VertexId) -> bool {
        self.order_key(u) < self.order_key(v)
    }

    /// Number of neighbors `x` of `u` with `v ≺ x`. `v` need not be adjacent to `u`.
    #[inline]
    pub fn suffix_count(&self, u: VertexId, v: VertexId) -> usize {
        let adj = self.neighbors(u);
        adj.len() - self.suffix_start(adj, v)
    }

    /// Index of the first entry of `adj` strictly above `v` in the order.
    #[inline]
    pub(crate) fn suffix_start(&self, adj: &[VertexId], v: VertexId) -> usize {
        let kv = self.order_key(v);
        adj.partition_point(|&x| self.order_key(x) <= kv)
    }

    /// Edge test by binary search in the shorter of the two lists.
    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        if u == v {
            return false;
        }
        let (short, target) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        let kt = self.order_key(target);
        self.neighbors(short)
            .binary_search_by(|&x| self.order_key(x).cmp(&kt))
            .is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Writes the graph as a SNAP-style edge list using original labels.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for &(a, b) in &self.edges {
            writeln!(out, "{}\t{}", self.label(a), self.label(b))?;
        }
        Ok(())
    }
}

/// Reads a whitespace-separated edge list. Lines starting with `#` and blank
/// lines are skipped; tokens after the first two on a line are ignored.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<(Graph, LoadSummary)> {
    let mut pairs = Vec::new();
    let mut lines = 0usize;
    let mut comments = 0usize;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        lines += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with('#') {
            comments += 1;
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let mut next = |which: &str| -> Result<u64> {
            let tok = tokens.next().ok_or_else(|| MotifError::Parse {
                line: i + 1,
                message: format!("missing {which} endpoint"),
            })?;
            tok.parse::<u64>().map_err(|_| MotifError::Parse {
                line: i + 1,
                message: format!("invalid vertex label {tok:?}"),
            })
        };
        let a = next("first")?;
        let b = next("second")?;
        pairs.push((a, b));
    }
    let (g, mut summary) = Graph::from_edges(pairs);
    summary.lines = lines;
    summary.comments = comments;
    Ok((g, summary))
}

/// Opens and loads an edge-list file.
pub fn load_path(path: &std::path::Path) -> Result<(Graph, LoadSummary)> {
    let file = std::fs::File::open(path)?;
    load_edge_list(std::io::BufReader::new(file))
}
