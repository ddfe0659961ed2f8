//! Timed pipeline runs, optionally thresholding regions on worker threads.

use std::thread;
use std::time::{Duration, Instant};

use entedge_core::pipeline::{run_pipeline_with, RegionJob};
use entedge_core::threshold::ThresholdReport;
use entedge_core::{GrayImage, PipelineConfig, PipelineResult, Result};

#[derive(Debug, Clone)]
pub struct PipelineRun {
    pub result: PipelineResult,
    pub wall_time: Duration,
}

/// Runs every region job on its own scoped thread; reports come back in job order.
pub fn run_jobs_parallel(jobs: &[RegionJob]) -> Vec<ThresholdReport> {
    thread::scope(|s| {
        let handles: Vec<_> = jobs.iter().map(|job| s.spawn(move || job.run())).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("region worker panicked"))
            .collect()
    })
}

pub fn run_jobs_sequential(jobs: &[RegionJob]) -> Vec<ThresholdReport> {
    jobs.iter().map(RegionJob::run).collect()
}

pub fn run_pipeline(img: &GrayImage, cfg: &PipelineConfig, parallel: bool) -> Result<PipelineRun> {
    let start = Instant::now();
    let result = if parallel {
        run_pipeline_with(img, cfg, run_jobs_parallel)?
    } else {
        run_pipeline_with(img, cfg, run_jobs_sequential)?
    };
    Ok(PipelineRun {
        result,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use entedge_core::synth::{gen_bimodal, Bimodal};

    #[test]
    fn parallel_equals_sequential() {
        let p = Bimodal {
            mu1: 50,
            mu2: 190,
            sigma: 18.0,
            mix_ratio: 0.5,
        };
        let img = gen_bimodal(40, 30, p, 4).unwrap();
        for seed in 0..5 {
            let cfg = PipelineConfig {
                rows: 3,
                cols: 4,
                ..PipelineConfig::proposed(seed)
            };
            let a = run_pipeline(&img, &cfg, false).unwrap();
            let b = run_pipeline(&img, &cfg, true).unwrap();
            assert_eq!(a.result, b.result);
        }
    }
}
