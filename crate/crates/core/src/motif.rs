//! The six connected 4-vertex motifs, induced-subgraph classification and
//! the linear map between induced and non-induced ("vanilla") counts.

use serde::{Deserialize, Serialize};

use crate::error::{MotifError, Result};
use crate::graph::{Graph, VertexId};

/// Connected 4-vertex motifs, numbered 1..=6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[repr(u8)]
pub enum Motif {
    ThreeStar = 1,
    ThreePath = 2,
    TailedTriangle = 3,
    FourCycle = 4,
    ChordalFourCycle = 5,
    FourClique = 6,
}

impl Motif {
    pub const ALL: [Motif; 6] = [
        Motif::ThreeStar,
        Motif::ThreePath,
        Motif::TailedTriangle,
        Motif::FourCycle,
        Motif::ChordalFourCycle,
        Motif::FourClique,
    ];

    /// Motif number, 1..=6.
    pub fn number(self) -> usize {
        self as usize
    }

    /// Zero-based slot in count arrays.
    pub fn slot(self) -> usize {
        self as usize - 1
    }

    pub fn from_number(i: usize) -> Option<Motif> {
        Motif::ALL.get(i.checked_sub(1)?).copied()
    }

    pub fn name(self) -> &'static str {
        match self {
            Motif::ThreeStar => "3-star",
            Motif::ThreePath => "3-path",
            Motif::TailedTriangle => "tailed-triangle",
            Motif::FourCycle => "4-cycle",
            Motif::ChordalFourCycle => "chordal-4-cycle",
            Motif::FourClique => "4-clique",
        }
    }
}

/// Outcome of classifying a vertex set of size at most four.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MotifClass {
    Motif(Motif),
    /// Fewer than four distinct vertices, or a disconnected induced subgraph.
    NotConnected4,
}

impl MotifClass {
    pub fn motif(self) -> Option<Motif> {
        match self {
            MotifClass::Motif(m) => Some(m),
            MotifClass::NotConnected4 => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Induced,
    Vanilla,
}

/// Six counts indexed by motif, tagged with their basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MotifCounts {
    pub values: [u64; 6],
    pub basis: Basis,
}

impl MotifCounts {
    pub fn induced(values: [u64; 6]) -> Self {
        MotifCounts { values, basis: Basis::Induced }
    }

    pub fn vanilla(values: [u64; 6]) -> Self {
        MotifCounts { values, basis: Basis::Vanilla }
    }

    pub fn get(&self, motif: Motif) -> u64 {
        self.values[motif.slot()]
    }
}

/// `CONVERSION[i][j]` is the number of distinct copies of motif `i+1` inside
/// motif `j+1`. Induced counts `C` and vanilla counts `N` satisfy `N = A·C`.
pub const CONVERSION: [[u64; 6]; 6] = [
    [1, 0, 1, 0, 2, 4],
    [0, 1, 2, 4, 6, 12],
    [0, 0, 1, 0, 4, 12],
    [0, 0, 0, 1, 1, 3],
    [0, 0, 0, 0, 1, 6],
    [0, 0, 0, 0, 0, 1],
];

/// Number of 3-paths contained in `motif` (row 2 of the conversion matrix).
pub fn three_paths_in(motif: Motif) -> u64 {
    CONVERSION[1][motif.slot()]
}

/// Pair order used by [`classify_pairs`]: (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Classifies a 4-vertex graph from its six pair-adjacency bits (see [`PAIRS`]).
///
/// Edge count together with the sorted degree sequence is a complete
/// invariant for the connected 4-vertex graphs.
pub fn classify_pairs(present: [bool; 6]) -> MotifClass {
    let mut degree = [0u8; 4];
    let mut edges = 0;
    for (k, &(a, b)) in PAIRS.iter().enumerate() {
        if present[k] {
            edges += 1;
            degree[a] += 1;
            degree[b] += 1;
        }
    }
    degree.sort_unstable_by(|a, b| b.cmp(a));
    let motif = match (edges, degree) {
        (3, [3, 1, 1, 1]) => Motif::ThreeStar,
        (3, [2, 2, 1, 1]) => Motif::ThreePath,
        (4, [2, 2, 2, 2]) => Motif::FourCycle,
        (4, [3, 2, 2, 1]) => Motif::TailedTriangle,
        (5, _) => Motif::ChordalFourCycle,
        (6, _) => Motif::FourClique,
        _ => return MotifClass::NotConnected4,
    };
    MotifClass::Motif(motif)
}

/// Classifies the subgraph induced by up to four vertices. Repeated vertices
/// collapse; fewer than four distinct vertices is `NotConnected4`.
pub fn classify_four(g: &Graph, vertices: &[VertexId]) -> MotifClass {
    let mut vs: Vec<VertexId> = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    if vs.len() != 4 {
        return MotifClass::NotConnected4;
    }
    let present = PAIRS.map(|(a, b)| g.has_edge(vs[a], vs[b]));
    classify_pairs(present)
}

/// Classifies the 4-vertex set spanned by the 3-path `a-b-c-d`, testing only
/// the three possible chords. Vertices must be distinct.
#[inline]
pub fn classify_path(g: &Graph, a: VertexId, b: VertexId, c: VertexId, d: VertexId) -> Motif {
    let ac = g.has_edge(a, c);
    let bd = g.has_edge(b, d);
    let ad = g.has_edge(a, d);
    match (ac as u8 + bd as u8 + ad as u8, ad) {
        (0, _) => Motif::ThreePath,
        (1, true) => Motif::FourCycle,
        (1, false) => Motif::TailedTriangle,
        (2, _) => Motif::ChordalFourCycle,
        _ => Motif::FourClique,
    }
}

/// `N = A·C` in checked 64-bit arithmetic.
pub fn induced_to_vanilla(c: &MotifCounts) -> Result<MotifCounts> {
    if c.basis != Basis::Induced {
        return Err(MotifError::Usage("expected induced counts".into()));
    }
    let mut out = [0u64; 6];
    for (i, row) in CONVERSION.iter().enumerate() {
        let mut acc = 0u64;
        for (j, &a) in row.iter().enumerate() {
            let term = a.checked_mul(c.values[j]).ok_or(MotifError::Overflow("vanilla counts"))?;
            acc = acc.checked_add(term).ok_or(MotifError::Overflow("vanilla counts"))?;
        }
        out[i] = acc;
    }
    Ok(MotifCounts::vanilla(out))
}

/// Solves `A·C = N` by back-substitution. A negative intermediate means the
/// input cannot be the vanilla counts of any graph.
pub fn vanilla_to_induced(n: &MotifCounts) -> Result<MotifCounts> {
    if n.basis != Basis::Vanilla {
        return Err(MotifError::Usage("expected vanilla counts".into()));
    }
    let mut c = [0i128; 6];
    for i in (0..6).rev() {
        let mut v = n.values[i] as i128;
        for j in i + 1..6 {
            v -= CONVERSION[i][j] as i128 * c[j];
        }
        if v < 0 {
            return Err(MotifError::Inconsistent(format!(
                "back-substitution gives negative induced count for motif {}",
                i + 1
            )));
        }
        c[i] = v;
    }
    Ok(MotifCounts::induced(c.map(|v| v as u64)))
}

/// Vanilla 3-star count `Σ_v C(d_v, 3)`.
pub fn star_count(g: &Graph) -> Result<u64> {
    let mut total = 0u64;
    for v in g.vertices() {
        let d = g.degree(v) as u128;
        if d < 3 {
            continue;
        }
        let term = d * (d - 1) * (d - 2) / 6;
        let term = u64::try_from(term).map_err(|_| MotifError::Overflow("3-star count"))?;
        total = total.checked_add(term).ok_or(MotifError::Overflow("3-star count"))?;
    }
    Ok(total)
}
