//! Iterative mean-split global threshold.
//!
//! Starting from an initial `t`, each step splits the pixels into those
//! above `t` and those at or below it, and moves `t` to the floor of the
//! average of the two (floored) class means. The loop stops at a fixpoint,
//! when a class becomes empty, or at the iteration cap. All arithmetic is
//! integer.

use alloc::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::entropy::{Histogram, LEVELS};
use crate::{BinaryImage, Error, GrayImage, Result};

pub const DEFAULT_INIT_LOW: u8 = 80;
pub const DEFAULT_INIT_HIGH: u8 = 140;
pub const DEFAULT_MAX_ITERATIONS: u32 = 256;

/// How the initial threshold is chosen and how long the loop may run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdConfig {
    pub init_low: u8,
    pub init_high: u8,
    /// Fixed initial threshold; no randomness is consumed when set.
    pub explicit_init: Option<u8>,
    pub max_iterations: u32,
}

impl Default for ThresholdConfig {
    fn default() -> Self {
        Self {
            init_low: DEFAULT_INIT_LOW,
            init_high: DEFAULT_INIT_HIGH,
            explicit_init: None,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

impl ThresholdConfig {
    pub fn with_range(init_low: u8, init_high: u8) -> Self {
        Self {
            init_low,
            init_high,
            ..Self::default()
        }
    }

    pub fn with_init(t: u8) -> Self {
        Self {
            explicit_init: Some(t),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.init_low > self.init_high {
            return Err(Error::InvalidConfig("init_low must not exceed init_high"));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig("max_iterations must be positive"));
        }
        Ok(())
    }
}

/// Outcome of one run of the threshold loop over one image or region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThresholdReport {
    pub init_t: u8,
    pub final_t: u8,
    /// Executed update steps.
    pub iterations: u32,
    /// Pixels read by the loop: `iterations * pixel count`.
    pub pixel_visits: u64,
    pub converged: bool,
    /// The last step found one class empty.
    pub degenerate: bool,
}

/// One application of the update map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub next: u8,
    pub degenerate: bool,
}

/// Random stream for region `region_index` of a pipeline seeded with `seed`.
///
/// The ChaCha8 key comes from `seed` and the stream id is the region index,
/// so each region's draws are independent of evaluation order.
pub fn region_stream(seed: u64, region_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(region_index);
    rng
}

/// The initial threshold: `explicit_init` if set, otherwise uniform in
/// `init_low..=init_high`.
pub fn draw_init<R: Rng + ?Sized>(cfg: &ThresholdConfig, rng: &mut R) -> u8 {
    match cfg.explicit_init {
        Some(t) => t,
        None => rng.random_range(cfg.init_low..=cfg.init_high),
    }
}

/// Applies the update map once by scanning every pixel.
///
/// If either class is empty the step is degenerate and `next == t`.
pub fn threshold_step(img: &GrayImage, t: u8) -> Step {
    let (mut sum_above, mut n_above) = (0u64, 0u64);
    let mut sum_below = 0u64;
    for &p in img.pixels() {
        if p > t {
            sum_above += u64::from(p);
            n_above += 1;
        } else {
            sum_below += u64::from(p);
        }
    }
    let n_below = img.len() as u64 - n_above;
    finish_step(t, sum_above, n_above, sum_below, n_below)
}

/// [`threshold_step`] evaluated from a histogram instead of the pixels.
pub fn histogram_step(hist: &Histogram, t: u8) -> Step {
    let (mut sum_above, mut n_above, mut sum_below, mut n_below) = (0u64, 0u64, 0u64, 0u64);
    for (g, &c) in hist.counts().iter().enumerate() {
        if g > t as usize {
            sum_above += g as u64 * c;
            n_above += c;
        } else {
            sum_below += g as u64 * c;
            n_below += c;
        }
    }
    finish_step(t, sum_above, n_above, sum_below, n_below)
}

fn finish_step(t: u8, sum_above: u64, n_above: u64, sum_below: u64, n_below: u64) -> Step {
    if n_above == 0 || n_below == 0 {
        return Step {
            next: t,
            degenerate: true,
        };
    }
    let mean_above = sum_above / n_above;
    let mean_below = sum_below / n_below;
    // Both means are at most 255, so the average fits in u8.
    Step {
        next: ((mean_above + mean_below) / 2) as u8,
        degenerate: false,
    }
}

/// Runs the loop from a known initial threshold.
pub fn iterate_from(img: &GrayImage, init: u8, max_iterations: u32) -> ThresholdReport {
    let per_pass = img.len() as u64;
    let mut current = init;
    let mut iterations = 0u32;
    let (converged, degenerate) = loop {
        if iterations == max_iterations {
            break (false, false);
        }
        let step = threshold_step(img, current);
        iterations += 1;
        if step.degenerate {
            break (true, true);
        }
        if step.next == current {
            break (true, false);
        }
        current = step.next;
    };
    ThresholdReport {
        init_t: init,
        final_t: current,
        iterations,
        pixel_visits: u64::from(iterations) * per_pass,
        converged,
        degenerate,
    }
}

/// Draws the initial threshold from `rng` (unless fixed) and runs the loop.
pub fn iterative_threshold<R: Rng + ?Sized>(
    img: &GrayImage,
    cfg: &ThresholdConfig,
    rng: &mut R,
) -> Result<ThresholdReport> {
    cfg.validate()?;
    let init = draw_init(cfg, rng);
    Ok(iterate_from(img, init, cfg.max_iterations))
}

/// 1 where the pixel is at least `t`, 0 elsewhere.
pub fn binarize(img: &GrayImage, t: u8) -> BinaryImage {
    let bits = img.pixels().iter().map(|&p| (p >= t) as u8).collect();
    BinaryImage::new(img.width(), img.height(), bits).expect("dimensions come from a valid image")
}

/// Every non-degenerate fixpoint of the update map, found by trying all 256
/// thresholds against the image histogram.
pub fn fixpoint_set(img: &GrayImage) -> BTreeSet<u8> {
    let hist = Histogram::of(img);
    (0..LEVELS as u16)
        .map(|t| t as u8)
        .filter(|&t| {
            histogram_step(&hist, t)
                == Step {
                    next: t,
                    degenerate: false,
                }
        })
        .collect()
}
