//! Estimation of the six connected 4-vertex motif counts of large undirected
//! graphs by 3-path sampling, with exact counters for verification and
//! Chernoff-bound error bars.

pub mod basic;
pub mod centered;
pub mod error;
pub mod error_bars;
pub mod estimate;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod motif;
pub mod report;
pub mod sampling;

pub use basic::{build_basic_weights, estimate_basic, BasicSampler, BasicWeights};
pub use centered::{build_centered_weights, estimate_centered, is_centered, CenteredSampler, CenteredWeights};
pub use error::{MotifError, Result};
pub use error_bars::{interval_for_c1, interval_for_motif, invert_bounds, kl_divergence, ConfidenceInterval, MotifInterval};
pub use estimate::{Estimate, PathSample, SampleConfig, SamplerKind};
pub use exact::{brute_force_counts, fast_exact_counts, ExactCounts};
pub use graph::{load_edge_list, Graph, LoadSummary, OrderKey, VertexId};
pub use motif::{Motif, MotifClass, MotifCounts};
pub use sampling::{DiscreteDistribution, RandomSource};
