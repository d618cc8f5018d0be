//! Command pipelines and their machine-readable reports.
//!
//! Every report serializes with a fixed key order. Wall-clock figures live
//! under `timing` so that two runs with the same configuration can be
//! compared byte for byte once that key is removed.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::basic::BasicSampler;
use crate::centered::CenteredSampler;
use crate::error::{MotifError, Result};
use crate::error_bars::{intervals, MotifInterval};
use crate::estimate::{Estimate, SampleConfig, SamplerKind};
use crate::exact::{brute_force_counts, fast_exact_counts, ExactCounts};
use crate::graph::{Graph, LoadSummary};
use crate::motif::Motif;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphInfo {
    pub path: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    #[serde(rename = "W")]
    pub w: u64,
    #[serde(rename = "Lambda")]
    pub lambda: u64,
    #[serde(rename = "N1")]
    pub star_vanilla: u64,
    pub self_loops_dropped: usize,
    pub duplicate_edges_dropped: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub load_s: f64,
    pub preprocess_s: f64,
    pub sample_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MotifRow {
    pub motif: usize,
    pub name: String,
    pub sampler: SamplerKind,
    pub samples: u64,
    pub estimate: f64,
    /// Raw success count; absent for the derived 3-star estimate.
    pub count: Option<u64>,
    pub scale: Option<f64>,
    pub lo: f64,
    pub hi: f64,
    pub rel_half_width: Option<f64>,
    pub exact: Option<u64>,
    pub rel_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EstimateReport {
    pub graph: GraphInfo,
    pub samples_basic: u64,
    pub samples_centered: u64,
    pub seed: u64,
    pub workers: usize,
    pub delta: f64,
    pub motifs: Vec<MotifRow>,
    pub timing: Timing,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CountRow {
    pub motif: usize,
    pub name: String,
    pub induced: u64,
    pub vanilla: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExactReport {
    pub graph: GraphInfo,
    pub method: String,
    pub triangles: u64,
    pub motifs: Vec<CountRow>,
    pub timing: Timing,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareRow {
    pub motif: usize,
    pub name: String,
    pub exact: u64,
    pub basic_estimate: f64,
    pub basic_rel_err: Option<f64>,
    /// `None` when `Λ = 0`.
    pub centered_estimate: Option<f64>,
    pub centered_rel_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompareReport {
    pub graph: GraphInfo,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    pub w_over_lambda: Option<f64>,
    pub motifs: Vec<CompareRow>,
    pub timing: Timing,
}

/// One point of a convergence sweep; columns match the CSV layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepRow {
    pub graph: String,
    pub motif: usize,
    pub k: u64,
    pub seed: u64,
    pub estimate: f64,
    pub lo: f64,
    pub hi: f64,
    pub exact: Option<u64>,
    pub rel_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConvergeReport {
    pub graph: GraphInfo,
    pub sweep: Vec<u64>,
    pub runs: usize,
    pub seed: u64,
    pub workers: usize,
    pub delta: f64,
    pub rows: Vec<SweepRow>,
    pub timing: Timing,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InfoReport {
    pub graph: GraphInfo,
    pub triangles: u64,
    pub timing: Timing,
}

/// Any report, tagged by the command that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Estimate(EstimateReport),
    Exact(ExactReport),
    Brute(ExactReport),
    Compare(CompareReport),
    Converge(ConvergeReport),
    Info(InfoReport),
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Parses and validates a JSON report; unknown or missing keys are errors.
    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| MotifError::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }

    pub fn timing_mut(&mut self) -> &mut Timing {
        match self {
            Report::Estimate(r) => &mut r.timing,
            Report::Exact(r) | Report::Brute(r) => &mut r.timing,
            Report::Compare(r) => &mut r.timing,
            Report::Converge(r) => &mut r.timing,
            Report::Info(r) => &mut r.timing,
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Estimate(r) => {
                out.push_str(SWEEP_HEADER);
                for row in &r.motifs {
                    let sweep = SweepRow {
                        graph: r.graph.path.clone(),
                        motif: row.motif,
                        k: row.samples,
                        seed: r.seed,
                        estimate: row.estimate,
                        lo: row.lo,
                        hi: row.hi,
                        exact: row.exact,
                        rel_err: row.rel_err,
                    };
                    push_sweep_row(&mut out, &sweep);
                }
            }
            Report::Converge(r) => {
                out.push_str(SWEEP_HEADER);
                for row in &r.rows {
                    push_sweep_row(&mut out, row);
                }
            }
            Report::Exact(r) | Report::Brute(r) => {
                out.push_str("graph,motif,name,induced,vanilla\n");
                for row in &r.motifs {
                    let _ = writeln!(out, "{},{},{},{},{}", r.graph.path, row.motif, row.name, row.induced, row.vanilla);
                }
            }
            Report::Compare(r) => {
                out.push_str(
                    "graph,motif,k,seed,exact,basic_estimate,basic_rel_err,centered_estimate,centered_rel_err\n",
                );
                for row in &r.motifs {
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{},{},{},{},{}",
                        r.graph.path,
                        row.motif,
                        r.samples,
                        r.seed,
                        row.exact,
                        row.basic_estimate,
                        opt(row.basic_rel_err),
                        opt(row.centered_estimate),
                        opt(row.centered_rel_err)
                    );
                }
            }
            Report::Info(r) => {
                let g = &r.graph;
                out.push_str("graph,n,m,max_degree,W,Lambda,N1,triangles\n");
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    g.path, g.n, g.m, g.max_degree, g.w, g.lambda, g.star_vanilla, r.triangles
                );
            }
        }
        out
    }
}

const SWEEP_HEADER: &str = "graph,motif,k,seed,estimate,lo,hi,exact,rel_err\n";

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn push_sweep_row(out: &mut String, r: &SweepRow) {
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{},{},{}",
        r.graph,
        r.motif,
        r.k,
        r.seed,
        r.estimate,
        r.lo,
        r.hi,
        opt(r.exact),
        opt(r.rel_err)
    );
}

/// `|estimate - exact| / exact`; `None` when the exact count is 0.
pub fn relative_error(estimate: f64, exact: u64) -> Option<f64> {
    (exact != 0).then(|| (estimate - exact as f64).abs() / exact as f64)
}

/// Options shared by the sampling commands.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingOptions {
    pub samples_basic: u64,
    pub samples_centered: u64,
    pub seed: u64,
    pub workers: usize,
    pub delta: f64,
}

impl SamplingOptions {
    pub fn new(samples: u64, seed: u64) -> Self {
        SamplingOptions { samples_basic: samples, samples_centered: samples, seed, workers: 1, delta: 0.01 }
    }

    fn validate(&self) -> Result<()> {
        if self.samples_basic == 0 || self.samples_centered == 0 {
            return Err(MotifError::Usage("sample count k must be at least 1".into()));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(MotifError::Usage(format!("delta must lie in (0, 1), got {}", self.delta)));
        }
        Ok(())
    }
}

/// Preprocessed graph: both samplers plus summary statistics.
pub struct Prepared<'g> {
    pub graph: &'g Graph,
    pub basic: BasicSampler<'g>,
    pub centered: CenteredSampler<'g>,
    pub info: GraphInfo,
    pub preprocess_s: f64,
}

impl<'g> Prepared<'g> {
    pub fn new(graph: &'g Graph, path: &str, summary: &LoadSummary) -> Result<Self> {
        let t = Instant::now();
        let basic = BasicSampler::new(graph)?;
        let centered = CenteredSampler::new(graph)?;
        let preprocess_s = t.elapsed().as_secs_f64();
        let info = GraphInfo {
            path: path.to_string(),
            n: graph.num_vertices(),
            m: graph.num_edges(),
            max_degree: graph.max_degree(),
            w: basic.total(),
            lambda: centered.total(),
            star_vanilla: basic.star_vanilla(),
            self_loops_dropped: summary.self_loops,
            duplicate_edges_dropped: summary.duplicate_edges,
        };
        Ok(Prepared { graph, basic, centered, info, preprocess_s })
    }

    /// Runs both samplers: motifs 1..=3 from the basic sampler and 4..=6
    /// from the centered one.
    pub fn combined_estimate(&self, opts: &SamplingOptions) -> Result<(Estimate, Estimate)> {
        opts.validate()?;
        let basic = self
            .basic
            .estimate(&SampleConfig::new(opts.samples_basic, opts.seed).with_workers(opts.workers))?;
        let centered = self
            .centered
            .estimate(&SampleConfig::new(opts.samples_centered, opts.seed).with_workers(opts.workers))?;
        Ok((basic, centered))
    }
}

fn combined_rows(
    basic: &Estimate,
    centered: &Estimate,
    delta: f64,
    exact: Option<&ExactCounts>,
) -> Result<Vec<MotifRow>> {
    let basic_iv = intervals(basic, delta)?;
    let centered_iv = intervals(centered, delta)?;
    let pick = |list: &[MotifInterval], m: Motif| *list.iter().find(|i| i.motif == m).expect("interval");
    let mut rows = Vec::with_capacity(6);
    for m in Motif::ALL {
        let (est, iv) = if m.number() <= 3 { (basic, pick(&basic_iv, m)) } else { (centered, pick(&centered_iv, m)) };
        let exact_count = exact.map(|e| e.induced.get(m));
        rows.push(MotifRow {
            motif: m.number(),
            name: m.name().to_string(),
            sampler: est.sampler,
            samples: est.samples,
            estimate: iv.estimate,
            count: est.scale(m).map(|_| est.count(m)),
            scale: est.scale(m),
            lo: iv.lower,
            hi: iv.upper,
            rel_half_width: iv.relative_half_width(),
            exact: exact_count,
            rel_err: exact_count.and_then(|c| relative_error(iv.estimate, c)),
        });
    }
    Ok(rows)
}

/// `estimate`: sampler estimates with error bars. `exact`, when supplied,
/// adds exact counts and relative errors to each row.
pub fn run_estimate(prep: &Prepared, opts: &SamplingOptions, exact: Option<&ExactCounts>) -> Result<EstimateReport> {
    let t = Instant::now();
    let (basic, centered) = prep.combined_estimate(opts)?;
    let motifs = combined_rows(&basic, &centered, opts.delta, exact)?;
    let sample_s = t.elapsed().as_secs_f64();
    Ok(EstimateReport {
        graph: prep.info.clone(),
        samples_basic: opts.samples_basic,
        samples_centered: opts.samples_centered,
        seed: opts.seed,
        workers: opts.workers.max(1),
        delta: opts.delta,
        motifs,
        timing: Timing { load_s: 0.0, preprocess_s: prep.preprocess_s, sample_s },
    })
}

fn count_rows(counts: &ExactCounts) -> Vec<CountRow> {
    Motif::ALL
        .iter()
        .map(|&m| CountRow {
            motif: m.number(),
            name: m.name().to_string(),
            induced: counts.induced.get(m),
            vanilla: counts.vanilla.get(m),
        })
        .collect()
}

/// `exact`: fast exact counts in both bases.
pub fn run_exact(prep: &Prepared) -> Result<ExactReport> {
    let t = Instant::now();
    let counts = fast_exact_counts(prep.graph)?;
    Ok(ExactReport {
        graph: prep.info.clone(),
        method: "fast".into(),
        triangles: counts.triangles,
        motifs: count_rows(&counts),
        timing: Timing { load_s: 0.0, preprocess_s: prep.preprocess_s, sample_s: t.elapsed().as_secs_f64() },
    })
}

/// `brute`: exhaustive 4-subset counts, refused above `cap` vertices.
pub fn run_brute(prep: &Prepared, cap: usize) -> Result<ExactReport> {
    let t = Instant::now();
    let counts = brute_force_counts(prep.graph, cap)?;
    Ok(ExactReport {
        graph: prep.info.clone(),
        method: "brute".into(),
        triangles: counts.triangles,
        motifs: count_rows(&counts),
        timing: Timing { load_s: 0.0, preprocess_s: prep.preprocess_s, sample_s: t.elapsed().as_secs_f64() },
    })
}

/// `compare`: both samplers on the cycle-based motifs at the same `k`.
pub fn run_compare(prep: &Prepared, opts: &SamplingOptions) -> Result<CompareReport> {
    let exact = fast_exact_counts(prep.graph)?;
    let t = Instant::now();
    let (basic, centered) = prep.combined_estimate(opts)?;
    let has_centered = prep.info.lambda > 0;
    let motifs = [Motif::FourCycle, Motif::ChordalFourCycle, Motif::FourClique]
        .into_iter()
        .map(|m| {
            let truth = exact.induced.get(m);
            let b = basic.value(m).unwrap_or(0.0);
            let c = has_centered.then(|| centered.value(m).unwrap_or(0.0));
            CompareRow {
                motif: m.number(),
                name: m.name().to_string(),
                exact: truth,
                basic_estimate: b,
                basic_rel_err: relative_error(b, truth),
                centered_estimate: c,
                centered_rel_err: c.and_then(|c| relative_error(c, truth)),
            }
        })
        .collect();
    Ok(CompareReport {
        graph: prep.info.clone(),
        samples: opts.samples_basic,
        seed: opts.seed,
        workers: opts.workers.max(1),
        w_over_lambda: has_centered.then(|| prep.info.w as f64 / prep.info.lambda as f64),
        motifs,
        timing: Timing { load_s: 0.0, preprocess_s: prep.preprocess_s, sample_s: t.elapsed().as_secs_f64() },
    })
}

/// `converge`: for each `k` in `sweep`, `runs` independent runs with seeds
/// `seed, seed+1, ...`; one row per (k, run, motif).
pub fn run_converge(prep: &Prepared, opts: &SamplingOptions, sweep: &[u64], runs: usize) -> Result<ConvergeReport> {
    if sweep.is_empty() || runs == 0 {
        return Err(MotifError::Usage("converge needs a non-empty sweep and at least one run".into()));
    }
    let exact = fast_exact_counts(prep.graph)?;
    let t = Instant::now();
    let mut rows = Vec::with_capacity(sweep.len() * runs * 6);
    for &k in sweep {
        for r in 0..runs {
            let seed = opts.seed.wrapping_add(r as u64);
            let run_opts = SamplingOptions { samples_basic: k, samples_centered: k, seed, ..opts.clone() };
            let (basic, centered) = prep.combined_estimate(&run_opts)?;
            for row in combined_rows(&basic, &centered, opts.delta, Some(&exact))? {
                rows.push(SweepRow {
                    graph: prep.info.path.clone(),
                    motif: row.motif,
                    k,
                    seed,
                    estimate: row.estimate,
                    lo: row.lo,
                    hi: row.hi,
                    exact: row.exact,
                    rel_err: row.rel_err,
                });
            }
        }
    }
    Ok(ConvergeReport {
        graph: prep.info.clone(),
        sweep: sweep.to_vec(),
        runs,
        seed: opts.seed,
        workers: opts.workers.max(1),
        delta: opts.delta,
        rows,
        timing: Timing { load_s: 0.0, preprocess_s: prep.preprocess_s, sample_s: t.elapsed().as_secs_f64() },
    })
}

/// `info`: graph statistics.
pub fn run_info(prep: &Prepared) -> Result<InfoReport> {
    let (triangles, _) = crate::exact::triangles_and_tailed(prep.graph)?;
    Ok(InfoReport {
        graph: prep.info.clone(),
        triangles,
        timing: Timing { load_s: 0.0, preprocess_s: prep.preprocess_s, sample_s: 0.0 },
    })
}
