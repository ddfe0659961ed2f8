//! The `entedge` command line.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use entedge_core::edge::{BorderPolicy, EdgeConfig, EdgeRule, DEFAULT_ENTROPY_THRESHOLD};
use entedge_core::pipeline::{plan_regions, PipelineConfig};
use entedge_core::sweep::sweep_init;
use entedge_core::synth::{gen_bimodal, gen_checkerboard, gen_constant, Bimodal};
use entedge_core::threshold::{ThresholdConfig, ThresholdReport};
use entedge_core::GrayImage;

use crate::pgm::{read_pgm, write_pgm, PgmError};
use crate::run::{run_jobs_parallel, run_jobs_sequential, run_pipeline};
use crate::{bench, csv};

#[derive(Debug, Parser)]
#[command(
    name = "entedge",
    version,
    about = "Entropy-based edge detection with per-region thresholds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Threshold per region, then detect edges; writes the edge map as PGM.
    Detect(DetectArgs),
    /// Print per-region thresholds and iteration counts only.
    Threshold(ThresholdArgs),
    /// Iteration count for every initial threshold in a range (CSV).
    Sweep(SweepArgs),
    /// Compare the baseline and partitioned pipelines over several seeds (CSV).
    Bench(BenchArgs),
    /// Write a synthetic test image.
    Synth(SynthArgs),
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Region grid as ROWSxCOLS.
    #[arg(long, default_value = "2x2", value_parser = parse_grid)]
    pub grid: (usize, usize),
    /// Inclusive range of the random initial threshold, LO:HI.
    #[arg(long, default_value = "80:140", value_parser = parse_range)]
    pub init_range: (u8, u8),
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fixed initial thresholds, one per region in row-major order.
    #[arg(long, value_delimiter = ',')]
    pub init_t: Option<Vec<u8>>,
    /// Threshold regions on separate threads.
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Count,
    Entropy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BorderArg {
    Zero,
    Copy,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub region: RegionArgs,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value_t = ModeArg::Count)]
    pub mode: ModeArg,
    #[arg(long, default_value_t = DEFAULT_ENTROPY_THRESHOLD)]
    pub entropy_threshold: f64,
    #[arg(long, value_enum, default_value_t = BorderArg::Zero)]
    pub border: BorderArg,
    /// Per-region threshold reports as CSV.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Write the edge map as ASCII (P2) instead of binary (P5).
    #[arg(long)]
    pub ascii: bool,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[command(flatten)]
    pub region: RegionArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "0:255", value_parser = parse_range)]
    pub range: (u8, u8),
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Number of seeds; seeds 0..N are used.
    #[arg(long, default_value_t = 10)]
    pub seeds: u64,
    /// Repetitions per run; wall time is the median.
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub parallel: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SynthKind {
    Constant,
    Checkerboard,
    Bimodal,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, value_enum)]
    pub kind: SynthKind,
    /// Image size as WIDTHxHEIGHT.
    #[arg(long, value_parser = parse_size)]
    pub size: (usize, usize),
    /// Pixel value of a constant image.
    #[arg(long, default_value_t = 0)]
    pub value: u8,
    /// Checkerboard cell size.
    #[arg(long, default_value_t = 1)]
    pub cell: usize,
    #[arg(long, default_value_t = 0)]
    pub lo: u8,
    #[arg(long, default_value_t = 255)]
    pub hi: u8,
    #[arg(long, default_value_t = 60)]
    pub mu1: u8,
    #[arg(long, default_value_t = 180)]
    pub mu2: u8,
    #[arg(long, default_value_t = 15.0)]
    pub sigma: f64,
    /// Probability of the first mode.
    #[arg(long, default_value_t = 0.5)]
    pub mix: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub ascii: bool,
}

fn parse_pair<T: std::str::FromStr>(s: &str, sep: char, what: &str) -> Result<(T, T), String> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| format!("expected {what}"))?;
    let a = a.trim().parse().map_err(|_| format!("expected {what}"))?;
    let b = b.trim().parse().map_err(|_| format!("expected {what}"))?;
    Ok((a, b))
}

fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = parse_pair(&s.to_ascii_lowercase(), 'x', "ROWSxCOLS")?;
    if r == 0 || c == 0 {
        return Err("grid rows and columns must be positive".into());
    }
    Ok((r, c))
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = parse_pair(&s.to_ascii_lowercase(), 'x', "WIDTHxHEIGHT")?;
    if w == 0 || h == 0 {
        return Err("width and height must be positive".into());
    }
    Ok((w, h))
}

fn parse_range(s: &str) -> Result<(u8, u8), String> {
    let (lo, hi) = parse_pair(s, ':', "LO:HI with values in 0..=255")?;
    if lo > hi {
        return Err("range must satisfy LO <= HI".into());
    }
    Ok((lo, hi))
}

#[derive(Debug)]
pub enum CliError {
    Io {
        path: PathBuf,
        source: io::Error,
    },
    Pgm {
        path: PathBuf,
        source: PgmError,
    },
    /// The inputs violate a precondition of the operation.
    Precondition(entedge_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Pgm { .. } => 1,
            CliError::Precondition(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Pgm { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Precondition(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<entedge_core::Error> for CliError {
    fn from(e: entedge_core::Error) -> Self {
        CliError::Precondition(e)
    }
}

fn load(path: &Path) -> Result<GrayImage, CliError> {
    let bytes = fs::read(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })?;
    read_pgm(&bytes).map_err(|source| CliError::Pgm {
        path: path.into(),
        source,
    })
}

fn save(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn pipeline_config(args: &RegionArgs, edge: EdgeConfig) -> PipelineConfig {
    let (init_low, init_high) = args.init_range;
    PipelineConfig {
        rows: args.grid.0,
        cols: args.grid.1,
        threshold: ThresholdConfig::with_range(init_low, init_high),
        edge,
        seed: args.seed,
        region_inits: args.init_t.clone(),
    }
}

/// `T: t1 t2 ... ; iters: i1 i2 ...`
pub fn threshold_line(reports: &[ThresholdReport]) -> String {
    let ts: Vec<String> = reports.iter().map(|r| r.final_t.to_string()).collect();
    let its: Vec<String> = reports.iter().map(|r| r.iterations.to_string()).collect();
    format!("T: {} ; iters: {}", ts.join(" "), its.join(" "))
}

fn notices(reports: &[ThresholdReport], err: &mut dyn Write) {
    for (i, r) in reports.iter().enumerate() {
        if r.degenerate {
            let _ = writeln!(
                err,
                "region {i}: degenerate (one class empty), threshold kept at {}",
                r.final_t
            );
        } else if !r.converged {
            let _ = writeln!(
                err,
                "region {i}: no fixpoint after {} iterations",
                r.iterations
            );
        }
    }
}

/// Executes one parsed invocation. Results go to files and `out`;
/// diagnostics go to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Detect(args) => {
            let img = load(&args.region.input)?;
            let edge = EdgeConfig {
                rule: match args.mode {
                    ModeArg::Count => EdgeRule::Count,
                    ModeArg::Entropy => EdgeRule::Entropy,
                },
                entropy_threshold: args.entropy_threshold,
                border: match args.border {
                    BorderArg::Zero => BorderPolicy::Zero,
                    BorderArg::Copy => BorderPolicy::CopyBinary,
                },
            };
            let cfg = pipeline_config(&args.region, edge);
            let run = run_pipeline(&img, &cfg, args.region.parallel)?;
            let reports = &run.result.region_reports;
            save(
                &args.output,
                &write_pgm(&run.result.edges.to_gray(), args.ascii),
            )?;
            if let Some(path) = &args.report {
                save(path, csv::report_csv(reports).as_bytes())?;
            }
            notices(reports, err);
            writeln!(out, "{}", threshold_line(reports)).map_err(stdout_err)?;
        }
        Command::Threshold(args) => {
            let img = load(&args.region.input)?;
            let cfg = pipeline_config(&args.region, EdgeConfig::default());
            let jobs = plan_regions(&img, &cfg)?;
            let reports = if args.region.parallel {
                run_jobs_parallel(&jobs)
            } else {
                run_jobs_sequential(&jobs)
            };
            notices(&reports, err);
            writeln!(out, "{}", threshold_line(&reports)).map_err(stdout_err)?;
        }
        Command::Sweep(args) => {
            let img = load(&args.input)?;
            let rows = sweep_init(&img, args.range.0, args.range.1);
            save(&args.out, csv::sweep_csv(&rows).as_bytes())?;
        }
        Command::Bench(args) => {
            let img = load(&args.input)?;
            let seeds: Vec<u64> = (0..args.seeds).collect();
            let rows = bench::compare_pipelines(&img, &seeds, args.reps, args.parallel)?;
            save(&args.out, csv::compare_csv(&rows).as_bytes())?;
            writeln!(out, "{}", bench::summary_line(&rows)).map_err(stdout_err)?;
        }
        Command::Synth(args) => {
            let (w, h) = args.size;
            let img = match args.kind {
                SynthKind::Constant => gen_constant(w, h, args.value)?,
                SynthKind::Checkerboard => gen_checkerboard(w, h, args.cell, args.lo, args.hi)?,
                SynthKind::Bimodal => {
                    let params = Bimodal {
                        mu1: args.mu1,
                        mu2: args.mu2,
                        sigma: args.sigma,
                        mix_ratio: args.mix,
                    };
                    gen_bimodal(w, h, params, args.seed)?
                }
            };
            save(&args.out, &write_pgm(&img, args.ascii))?;
        }
    }
    Ok(())
}
