//! Iteration counts as a function of the initial threshold.

use alloc::vec::Vec;

use crate::threshold::{iterate_from, DEFAULT_MAX_ITERATIONS};
use crate::GrayImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepRow {
    pub init_t: u8,
    pub final_t: u8,
    pub iterations: u32,
    pub converged: bool,
    pub degenerate: bool,
}

/// Runs the threshold loop from every initial value in `lo..=hi`, ascending.
/// Empty when `lo > hi`.
pub fn sweep_init(img: &GrayImage, lo: u8, hi: u8) -> Vec<SweepRow> {
    (lo..=hi)
        .map(|t| {
            let r = iterate_from(img, t, DEFAULT_MAX_ITERATIONS);
            SweepRow {
                init_t: t,
                final_t: r.final_t,
                iterations: r.iterations,
                converged: r.converged,
                degenerate: r.degenerate,
            }
        })
        .collect()
}

/// Mean iteration count over the rows whose initial value lies in `lo..=hi`.
pub fn mean_iterations(rows: &[SweepRow], lo: u8, hi: u8) -> Option<f64> {
    let (sum, n) = rows
        .iter()
        .filter(|r| (lo..=hi).contains(&r.init_t))
        .fold((0u64, 0u64), |(s, n), r| {
            (s + u64::from(r.iterations), n + 1)
        });
    (n > 0).then(|| sum as f64 / n as f64)
}
