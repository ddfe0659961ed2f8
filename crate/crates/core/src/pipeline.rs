//! End-to-end detectors.
//!
//! The image is tiled into a `rows × cols` grid, each region gets its own
//! iterative threshold, the binarized regions are stitched back together,
//! and edge detection runs once over the stitched image so windows straddle
//! region seams. A 1×1 grid with the full `0..=255` initial range is the
//! single-threshold baseline; 2×2 with `80..=140` is the partitioned variant.

use alloc::vec::Vec;

use crate::edge::{detect_edges, EdgeConfig};
use crate::image::RegionGrid;
use crate::threshold::{
    binarize, draw_init, iterate_from, region_stream, ThresholdConfig, ThresholdReport,
};
use crate::{assemble_regions, BinaryImage, Error, GrayImage, Rect, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineConfig {
    pub rows: usize,
    pub cols: usize,
    pub threshold: ThresholdConfig,
    pub edge: EdgeConfig,
    pub seed: u64,
    /// One fixed initial threshold per region, row-major. Overrides both
    /// the random draw and `threshold.explicit_init`.
    pub region_inits: Option<Vec<u8>>,
}

impl PipelineConfig {
    /// One region, initial threshold drawn from the whole gray range.
    pub fn baseline(seed: u64) -> Self {
        Self {
            rows: 1,
            cols: 1,
            threshold: ThresholdConfig::with_range(0, 255),
            edge: EdgeConfig::default(),
            seed,
            region_inits: None,
        }
    }

    /// 2×2 regions, initial thresholds drawn from `80..=140`.
    pub fn proposed(seed: u64) -> Self {
        Self {
            rows: 2,
            cols: 2,
            threshold: ThresholdConfig::with_range(80, 140),
            edge: EdgeConfig::default(),
            seed,
            region_inits: None,
        }
    }

    pub fn region_count(&self) -> usize {
        self.rows * self.cols
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineResult {
    pub edges: BinaryImage,
    /// The stitched per-region binarization that edge detection ran on.
    pub binary: BinaryImage,
    /// Row-major, one per region.
    pub region_reports: Vec<ThresholdReport>,
    pub total_pixel_visits: u64,
}

impl PipelineResult {
    pub fn thresholds(&self) -> Vec<u8> {
        self.region_reports.iter().map(|r| r.final_t).collect()
    }

    pub fn total_iterations(&self) -> u64 {
        self.region_reports
            .iter()
            .map(|r| u64::from(r.iterations))
            .sum()
    }
}

/// Thresholding work for one region; independent of every other job.
#[derive(Debug, Clone)]
pub struct RegionJob {
    pub index: usize,
    pub rect: Rect,
    pub image: GrayImage,
    cfg: ThresholdConfig,
    seed: u64,
}

impl RegionJob {
    pub fn run(&self) -> ThresholdReport {
        let mut rng = region_stream(self.seed, self.index as u64);
        let init = draw_init(&self.cfg, &mut rng);
        iterate_from(&self.image, init, self.cfg.max_iterations)
    }
}

/// Validates `cfg` against `img` and cuts it into per-region jobs.
pub fn plan_regions(img: &GrayImage, cfg: &PipelineConfig) -> Result<Vec<RegionJob>> {
    cfg.threshold.validate()?;
    cfg.edge.validate()?;
    let grid = RegionGrid::new(cfg.rows, cfg.cols, img.width(), img.height())?;
    if let Some(inits) = &cfg.region_inits {
        if inits.len() != grid.len() {
            return Err(Error::InitCountMismatch {
                expected: grid.len(),
                actual: inits.len(),
            });
        }
    }
    grid.regions()
        .iter()
        .enumerate()
        .map(|(index, &rect)| {
            let mut region_cfg = cfg.threshold;
            if let Some(inits) = &cfg.region_inits {
                region_cfg.explicit_init = Some(inits[index]);
            }
            Ok(RegionJob {
                index,
                rect,
                image: img.crop(rect)?,
                cfg: region_cfg,
                seed: cfg.seed,
            })
        })
        .collect()
}

/// Binarizes each job's region with its report, stitches, and detects edges.
pub fn finish(
    img: &GrayImage,
    jobs: &[RegionJob],
    reports: Vec<ThresholdReport>,
    edge: &EdgeConfig,
) -> Result<PipelineResult> {
    debug_assert_eq!(jobs.len(), reports.len());
    let parts: Vec<(BinaryImage, Rect)> = jobs
        .iter()
        .zip(&reports)
        .map(|(job, report)| (binarize(&job.image, report.final_t), job.rect))
        .collect();
    let binary = assemble_regions(&parts, img.width(), img.height())?;
    let edges = detect_edges(&binary, edge)?;
    let total_pixel_visits = reports.iter().map(|r| r.pixel_visits).sum();
    Ok(PipelineResult {
        edges,
        binary,
        region_reports: reports,
        total_pixel_visits,
    })
}

/// Runs the pipeline, handing the region jobs to `run_jobs`.
///
/// `run_jobs` must return one report per job in the same order; it may
/// evaluate them in any order or concurrently.
pub fn run_pipeline_with<F>(
    img: &GrayImage,
    cfg: &PipelineConfig,
    run_jobs: F,
) -> Result<PipelineResult>
where
    F: FnOnce(&[RegionJob]) -> Vec<ThresholdReport>,
{
    if img.width() < 3 || img.height() < 3 {
        return Err(Error::ImageTooSmall {
            width: img.width(),
            height: img.height(),
        });
    }
    let jobs = plan_regions(img, cfg)?;
    let reports = run_jobs(&jobs);
    finish(img, &jobs, reports, &cfg.edge)
}

/// Sequential [`run_pipeline_with`].
pub fn run_pipeline(img: &GrayImage, cfg: &PipelineConfig) -> Result<PipelineResult> {
    run_pipeline_with(img, cfg, |jobs| jobs.iter().map(RegionJob::run).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{gen_constant, gen_vertical_split};
    use alloc::vec;

    #[test]
    fn presets() {
        let b = PipelineConfig::baseline(3);
        assert_eq!(
            (b.rows, b.cols, b.threshold.init_low, b.threshold.init_high),
            (1, 1, 0, 255)
        );
        let p = PipelineConfig::proposed(3);
        assert_eq!(
            (p.rows, p.cols, p.threshold.init_low, p.threshold.init_high),
            (2, 2, 80, 140)
        );
        assert_eq!(b.edge, p.edge);
    }

    #[test]
    fn constant_image_gives_degenerate_regions_and_no_edges() {
        let img = gen_constant(10, 10, 42).unwrap();
        let r = run_pipeline(&img, &PipelineConfig::proposed(0)).unwrap();
        assert_eq!(r.region_reports.len(), 4);
        assert!(r.region_reports.iter().all(|rep| rep.degenerate));
        assert_eq!(r.edges.count_ones(), 0);
        assert_eq!(r.total_pixel_visits, 100);
    }

    #[test]
    fn split_fixture_with_fixed_inits() {
        let img = gen_vertical_split(8, 6, 50, 150).unwrap();
        let cfg = PipelineConfig {
            region_inits: Some(vec![100; 4]),
            ..PipelineConfig::proposed(9)
        };
        let r = run_pipeline(&img, &cfg).unwrap();
        assert_eq!(r.thresholds(), vec![100; 4]);
        // Left regions are all 50: step(100) is degenerate, final stays 100.
        assert!(r.region_reports[0].degenerate && r.region_reports[2].degenerate);
        for y in 0..6 {
            for x in 0..8 {
                let expected = (y > 0 && y < 5 && (x == 3 || x == 4)) as u8;
                assert_eq!(r.edges.get(x, y), expected, "({x}, {y})");
            }
        }
    }

    #[test]
    fn init_count_mismatch() {
        let img = gen_constant(4, 4, 1).unwrap();
        let cfg = PipelineConfig {
            region_inits: Some(vec![1, 2]),
            ..PipelineConfig::proposed(0)
        };
        assert_eq!(
            run_pipeline(&img, &cfg),
            Err(Error::InitCountMismatch {
                expected: 4,
                actual: 2
            })
        );
    }

    #[test]
    fn precondition_errors() {
        let small = gen_constant(2, 8, 1).unwrap();
        assert!(matches!(
            run_pipeline(&small, &PipelineConfig::baseline(0)),
            Err(Error::ImageTooSmall { .. })
        ));
        let img = gen_constant(4, 4, 1).unwrap();
        let cfg = PipelineConfig {
            rows: 5,
            ..PipelineConfig::baseline(0)
        };
        assert!(matches!(
            run_pipeline(&img, &cfg),
            Err(Error::GridExceedsImage { .. })
        ));
    }

    #[test]
    fn job_order_does_not_matter() {
        let img = GrayImage::from_fn(12, 9, |x, y| ((x * 31 + y * 17) % 256) as u8).unwrap();
        let cfg = PipelineConfig {
            rows: 3,
            cols: 2,
            ..PipelineConfig::proposed(11)
        };
        let forward = run_pipeline(&img, &cfg).unwrap();
        let reversed = run_pipeline_with(&img, &cfg, |jobs| {
            let mut out: Vec<(usize, ThresholdReport)> =
                jobs.iter().rev().map(|j| (j.index, j.run())).collect();
            out.sort_by_key(|(i, _)| *i);
            out.into_iter().map(|(_, r)| r).collect()
        })
        .unwrap();
        assert_eq!(forward, reversed);
    }
}
