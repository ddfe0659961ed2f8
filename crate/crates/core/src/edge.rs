//! 3×3 window entropy edge detector on binary images.
//!
//! For an interior pixel, the match count is the number of pixels in its
//! 3×3 window (centre included) equal to the centre. With `p = count / 9`
//! the centre's entropy is `-p ln p`; the pixel is an edge when that entropy
//! is at least the configured threshold. At the default threshold this is
//! exactly `count <= 6`, which is the integer rule used by default.

use crate::entropy::window_entropy;
use crate::{BinaryImage, Error, Result};

/// Default entropy cutoff in nats, `-(1/9) ln(1/9)` truncated to four places.
pub const DEFAULT_ENTROPY_THRESHOLD: f64 = 0.2441;

/// Largest match count the count rule still calls an edge.
pub const MAX_EDGE_COUNT: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeRule {
    /// Edge iff `count <= 6`.
    #[default]
    Count,
    /// Edge iff `window_entropy(count / 9) >= entropy_threshold`.
    Entropy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BorderPolicy {
    /// The one-pixel border ring of the edge map is 0.
    #[default]
    Zero,
    /// The border ring repeats the input binary values.
    CopyBinary,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeConfig {
    pub rule: EdgeRule,
    pub entropy_threshold: f64,
    pub border: BorderPolicy,
}

impl Default for EdgeConfig {
    fn default() -> Self {
        Self {
            rule: EdgeRule::Count,
            entropy_threshold: DEFAULT_ENTROPY_THRESHOLD,
            border: BorderPolicy::Zero,
        }
    }
}

impl EdgeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.entropy_threshold > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidConfig("entropy threshold must be positive"))
        }
    }
}

/// Pixels of the 3×3 window around `(x, y)` equal to the centre, in `1..=9`.
pub fn match_count(bin: &BinaryImage, x: usize, y: usize) -> Result<u32> {
    if x == 0 || y == 0 || x + 1 >= bin.width() || y + 1 >= bin.height() {
        return Err(Error::BorderCoordinate { x, y });
    }
    Ok(match_count_unchecked(bin, x, y))
}

fn match_count_unchecked(bin: &BinaryImage, x: usize, y: usize) -> u32 {
    let w = bin.width();
    let bits = bin.bits();
    let centre = bits[y * w + x];
    let mut count = 0;
    for row in [y - 1, y, y + 1] {
        let base = row * w + x;
        count += bits[base - 1..=base + 1]
            .iter()
            .filter(|&&b| b == centre)
            .count() as u32;
    }
    count
}

/// `window_entropy(count / 9)`.
pub fn central_pixel_entropy(count: u32) -> Result<f64> {
    if !(1..=9).contains(&count) {
        return Err(Error::CountOutOfRange(count));
    }
    window_entropy(f64::from(count) / 9.0)
}

pub fn is_edge(count: u32, cfg: &EdgeConfig) -> Result<bool> {
    let entropy = central_pixel_entropy(count)?;
    Ok(match cfg.rule {
        EdgeRule::Count => count <= MAX_EDGE_COUNT,
        EdgeRule::Entropy => entropy >= cfg.entropy_threshold,
    })
}

/// Edge map of `bin`; same dimensions as the input.
pub fn detect_edges(bin: &BinaryImage, cfg: &EdgeConfig) -> Result<BinaryImage> {
    cfg.validate()?;
    let (w, h) = (bin.width(), bin.height());
    if w < 3 || h < 3 {
        return Err(Error::ImageTooSmall {
            width: w,
            height: h,
        });
    }
    // Decisions for the nine possible counts, index = count.
    let mut table = [false; 10];
    for (count, slot) in table.iter_mut().enumerate().skip(1) {
        *slot = is_edge(count as u32, cfg)?;
    }
    let mut out = match cfg.border {
        BorderPolicy::Zero => BinaryImage::zeros(w, h)?,
        BorderPolicy::CopyBinary => bin.clone(),
    };
    for y in 1..h - 1 {
        for x in 1..w - 1 {
            let edge = table[match_count_unchecked(bin, x, y) as usize];
            out.set(x, y, edge as u8);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn checker(w: usize, h: usize) -> BinaryImage {
        let bits = (0..w * h).map(|i| ((i % w + i / w) % 2) as u8).collect();
        BinaryImage::new(w, h, bits).unwrap()
    }

    #[test]
    fn match_count_cases() {
        let ones = BinaryImage::new(3, 3, vec![1; 9]).unwrap();
        assert_eq!(match_count(&ones, 1, 1).unwrap(), 9);
        // Centre plus its four diagonal corners.
        assert_eq!(match_count(&checker(3, 3), 1, 1).unwrap(), 5);
        let mut lone = vec![0; 9];
        lone[4] = 1;
        let lone = BinaryImage::new(3, 3, lone).unwrap();
        assert_eq!(match_count(&lone, 1, 1).unwrap(), 1);
        assert_eq!(
            match_count(&ones, 0, 1),
            Err(Error::BorderCoordinate { x: 0, y: 1 })
        );
        assert_eq!(
            match_count(&ones, 1, 2),
            Err(Error::BorderCoordinate { x: 1, y: 2 })
        );
    }

    #[test]
    fn central_pixel_entropy_anchors() {
        assert!((central_pixel_entropy(4).unwrap() - 0.3604).abs() <= 5e-5);
        assert!((central_pixel_entropy(2).unwrap() - 0.3342).abs() <= 5e-5);
        assert_eq!(central_pixel_entropy(9).unwrap(), 0.0);
        assert_eq!(central_pixel_entropy(0), Err(Error::CountOutOfRange(0)));
        assert_eq!(central_pixel_entropy(10), Err(Error::CountOutOfRange(10)));
    }

    #[test]
    fn count_rule_boundaries() {
        let cfg = EdgeConfig::default();
        assert!(!is_edge(7, &cfg).unwrap());
        assert!(is_edge(6, &cfg).unwrap());
        assert!(is_edge(1, &cfg).unwrap());
        assert!(!is_edge(9, &cfg).unwrap());
    }

    #[test]
    fn entropy_rule_matches_count_rule() {
        let count_cfg = EdgeConfig::default();
        let analytic = window_entropy(1.0 / 9.0).unwrap();
        for threshold in [DEFAULT_ENTROPY_THRESHOLD, analytic] {
            let ent_cfg = EdgeConfig {
                rule: EdgeRule::Entropy,
                entropy_threshold: threshold,
                ..count_cfg
            };
            for count in 1..=9 {
                assert_eq!(
                    is_edge(count, &ent_cfg).unwrap(),
                    is_edge(count, &count_cfg).unwrap()
                );
            }
        }
        // count 1 is an edge although its entropy is below the peak near p = 1/e.
        let ent = EdgeConfig {
            rule: EdgeRule::Entropy,
            ..count_cfg
        };
        assert!(is_edge(1, &ent).unwrap());
    }

    #[test]
    fn higher_entropy_threshold_narrows_the_edge_band() {
        let cfg = EdgeConfig {
            rule: EdgeRule::Entropy,
            entropy_threshold: 0.34,
            ..EdgeConfig::default()
        };
        let edges: Vec<u32> = (1..=9).filter(|&c| is_edge(c, &cfg).unwrap()).collect();
        // H(3/9) = 0.366, H(4/9) = 0.360; H(2/9) = 0.334, H(5/9) = 0.327.
        assert_eq!(edges, vec![3, 4]);
    }

    #[test]
    fn constant_map_has_no_edges() {
        let ones = BinaryImage::new(5, 4, vec![1; 20]).unwrap();
        assert_eq!(
            detect_edges(&ones, &EdgeConfig::default())
                .unwrap()
                .count_ones(),
            0
        );
    }

    #[test]
    fn checkerboard_interior_is_all_edges() {
        let out = detect_edges(&checker(6, 5), &EdgeConfig::default()).unwrap();
        for y in 0..5 {
            for x in 0..6 {
                let interior = x > 0 && y > 0 && x < 5 && y < 4;
                assert_eq!(out.get(x, y), interior as u8, "({x}, {y})");
            }
        }
    }

    #[test]
    fn copy_border_keeps_input_ring() {
        let bin = checker(4, 4);
        let cfg = EdgeConfig {
            border: BorderPolicy::CopyBinary,
            ..EdgeConfig::default()
        };
        let out = detect_edges(&bin, &cfg).unwrap();
        for (x, y) in [(0, 0), (1, 0), (3, 2), (0, 3)] {
            assert_eq!(out.get(x, y), bin.get(x, y));
        }
        assert_eq!(out.get(1, 1), 1);
    }

    #[test]
    fn too_small_and_bad_threshold() {
        let tiny = BinaryImage::zeros(2, 5).unwrap();
        assert_eq!(
            detect_edges(&tiny, &EdgeConfig::default()),
            Err(Error::ImageTooSmall {
                width: 2,
                height: 5
            })
        );
        let cfg = EdgeConfig {
            entropy_threshold: 0.0,
            ..EdgeConfig::default()
        };
        assert!(detect_edges(&BinaryImage::zeros(3, 3).unwrap(), &cfg).is_err());
    }
}
