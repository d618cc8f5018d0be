use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use motif4::exact::DEFAULT_BRUTE_FORCE_CAP;
use motif4::graph::load_path;
use motif4::report::{self, Prepared, Report, SamplingOptions};
use motif4::MotifError;

#[derive(Parser, Debug)]
#[command(name = "motif4", version, about = "4-vertex motif counts by 3-path sampling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Estimate all six motif counts with error bars.
    Estimate(Common),
    /// Exact counts with the ordered enumerator.
    Exact(Common),
    /// Exact counts by classifying every 4-subset (small graphs only).
    Brute(Common),
    /// Basic vs centered sampler on the cycle-based motifs.
    Compare(Common),
    /// Repeated runs over a sweep of sample counts, for convergence plots.
    Converge {
        #[command(flatten)]
        common: Common,
        /// Comma-separated sample counts.
        #[arg(long, value_delimiter = ',', default_values_t = default_sweep())]
        sweep: Vec<u64>,
        /// Runs per sample count.
        #[arg(long, default_value_t = 50)]
        runs: usize,
    },
    /// Graph statistics: n, m, W, Lambda, N1, triangles.
    Info(Common),
}

fn default_sweep() -> Vec<u64> {
    (1..=20).map(|i| i * 2500).collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Common {
    /// Edge-list file (SNAP format).
    #[arg(long)]
    graph: PathBuf,
    /// Samples per sampler.
    #[arg(long, default_value_t = 200_000)]
    samples: u64,
    /// Override for the basic sampler's sample count.
    #[arg(long)]
    samples_basic: Option<u64>,
    /// Override for the centered sampler's sample count.
    #[arg(long)]
    samples_centered: Option<u64>,
    /// Random seed; drawn from system entropy when absent.
    #[arg(long)]
    seed: Option<u64>,
    /// Confidence parameter of the error bars.
    #[arg(long, default_value_t = 0.01)]
    delta: f64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Largest vertex count accepted by `brute`.
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    brute_cap: usize,
}

impl Common {
    fn sampling(&self) -> SamplingOptions {
        SamplingOptions {
            samples_basic: self.samples_basic.unwrap_or(self.samples),
            samples_centered: self.samples_centered.unwrap_or(self.samples),
            seed: self.seed.unwrap_or_else(rand::random),
            workers: self.workers.max(1),
            delta: self.delta,
        }
    }
}

fn run(cli: Cli) -> Result<(), MotifError> {
    let (common, extra) = match &cli.command {
        Command::Estimate(c)
        | Command::Exact(c)
        | Command::Brute(c)
        | Command::Compare(c)
        | Command::Info(c) => (c, None),
        Command::Converge { common, sweep, runs } => (common, Some((sweep.clone(), *runs))),
    };

    let t = Instant::now();
    let (graph, summary) = load_path(&common.graph).map_err(|e| with_path(e, &common.graph))?;
    let load_s = t.elapsed().as_secs_f64();
    let label = common.graph.display().to_string();
    let prep = Prepared::new(&graph, &label, &summary)?;
    let opts = common.sampling();

    let mut rep = match &cli.command {
        Command::Estimate(_) => Report::Estimate(report::run_estimate(&prep, &opts, None)?),
        Command::Exact(_) => Report::Exact(report::run_exact(&prep)?),
        Command::Brute(_) => Report::Brute(report::run_brute(&prep, common.brute_cap)?),
        Command::Compare(_) => Report::Compare(report::run_compare(&prep, &opts)?),
        Command::Converge { .. } => {
            let (sweep, runs) = extra.expect("converge arguments");
            Report::Converge(report::run_converge(&prep, &opts, &sweep, runs)?)
        }
        Command::Info(_) => Report::Info(report::run_info(&prep)?),
    };
    rep.timing_mut().load_s = load_s;

    let body = match common.format {
        Format::Json => rep.to_json() + "\n",
        Format::Csv => rep.to_csv(),
    };
    match &common.out {
        Some(path) => std::fs::write(path, body).map_err(|e| with_path(e.into(), path))?,
        None => std::io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn with_path(e: MotifError, path: &Path) -> MotifError {
    match e {
        MotifError::Io(io) => MotifError::Io(std::io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
        other => other,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("motif4: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
