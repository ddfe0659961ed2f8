//! Baseline versus partitioned comparison over a set of seeds.

use std::fmt;
use std::time::Duration;

use entedge_core::{GrayImage, PipelineConfig, Result};

use crate::run::run_pipeline;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// One region, initial threshold in `0..=255`.
    Baseline,
    /// 2×2 regions, initial thresholds in `80..=140`.
    Proposed,
}

impl Variant {
    pub fn config(self, seed: u64) -> PipelineConfig {
        match self {
            Variant::Baseline => PipelineConfig::baseline(seed),
            Variant::Proposed => PipelineConfig::proposed(seed),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Baseline => "baseline",
            Variant::Proposed => "proposed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareRow {
    pub seed: u64,
    pub variant: Variant,
    pub total_iterations: u64,
    pub total_pixel_visits: u64,
    /// Median over the repetitions.
    pub wall_time_micros: u64,
    /// One per region, row-major.
    pub final_thresholds: Vec<u8>,
}

/// Runs both variants for each seed, baseline first. Every run is repeated
/// `repetitions` times (at least once); counters come from the first run
/// and the wall time is the median.
pub fn compare_pipelines(
    img: &GrayImage,
    seeds: &[u64],
    repetitions: usize,
    parallel: bool,
) -> Result<Vec<CompareRow>> {
    let reps = repetitions.max(1);
    let mut rows = Vec::with_capacity(seeds.len() * 2);
    for &seed in seeds {
        for variant in [Variant::Baseline, Variant::Proposed] {
            let cfg = variant.config(seed);
            let mut times = Vec::with_capacity(reps);
            let first = run_pipeline(img, &cfg, parallel)?;
            times.push(first.wall_time);
            for _ in 1..reps {
                times.push(run_pipeline(img, &cfg, parallel)?.wall_time);
            }
            let result = first.result;
            rows.push(CompareRow {
                seed,
                variant,
                total_iterations: result.total_iterations(),
                total_pixel_visits: result.total_pixel_visits,
                wall_time_micros: median(&mut times).as_micros() as u64,
                final_thresholds: result.thresholds(),
            });
        }
    }
    Ok(rows)
}

fn median(times: &mut [Duration]) -> Duration {
    times.sort_unstable();
    let mid = times.len() / 2;
    if times.len() % 2 == 1 {
        times[mid]
    } else {
        (times[mid - 1] + times[mid]) / 2
    }
}

/// Per-variant means over a set of comparison rows.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VariantMeans {
    pub runs: usize,
    pub iterations: f64,
    pub pixel_visits: f64,
    pub wall_time_micros: f64,
}

pub fn variant_means(rows: &[CompareRow], variant: Variant) -> Option<VariantMeans> {
    let picked: Vec<&CompareRow> = rows.iter().filter(|r| r.variant == variant).collect();
    if picked.is_empty() {
        return None;
    }
    let n = picked.len() as f64;
    let mean = |f: fn(&CompareRow) -> u64| picked.iter().map(|r| f(r) as f64).sum::<f64>() / n;
    Some(VariantMeans {
        runs: picked.len(),
        iterations: mean(|r| r.total_iterations),
        pixel_visits: mean(|r| r.total_pixel_visits),
        wall_time_micros: mean(|r| r.wall_time_micros),
    })
}

/// One line: mean pixel visits, iterations and wall time for each variant.
pub fn summary_line(rows: &[CompareRow]) -> String {
    let part = |v: Variant| match variant_means(rows, v) {
        Some(m) => format!(
            "{v}: mean_pixel_visits={:.1} mean_iterations={:.2} mean_wall_time_micros={:.1}",
            m.pixel_visits, m.iterations, m.wall_time_micros
        ),
        None => format!("{v}: no runs"),
    };
    format!("{} ; {}", part(Variant::Baseline), part(Variant::Proposed))
}
