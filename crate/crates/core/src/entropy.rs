//! Gray-level histograms, probabilities and Shannon entropies.
//!
//! All entropies are in nats except [`self_information`], which takes an
//! explicit base.

use crate::{Error, GrayImage, Result};

/// Number of gray levels of an 8-bit image.
pub const LEVELS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogBase {
    /// Bits.
    Two,
    /// Nats.
    E,
}

/// `-log_base(p)`, the information conveyed by an event of probability `p`.
pub fn self_information(p: f64, base: LogBase) -> Result<f64> {
    check_probability(p)?;
    Ok(match base {
        LogBase::Two => -libm::log2(p),
        LogBase::E => -libm::log(p),
    })
}

/// `-p ln p`, the entropy contribution of a window's centre pixel whose
/// value occupies fraction `p` of the window.
pub fn window_entropy(p: f64) -> Result<f64> {
    check_probability(p)?;
    Ok(-p * libm::log(p))
}

fn check_probability(p: f64) -> Result<()> {
    if p > 0.0 && p <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidProbability)
    }
}

/// Gray-level counts of an image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: [u64; LEVELS],
    total: u64,
}

impl Histogram {
    pub fn of(img: &GrayImage) -> Self {
        let mut counts = [0u64; LEVELS];
        for &p in img.pixels() {
            counts[p as usize] += 1;
        }
        Self {
            counts,
            total: img.len() as u64,
        }
    }

    pub fn from_counts(counts: [u64; LEVELS]) -> Self {
        let total = counts.iter().sum();
        Self { counts, total }
    }

    pub fn counts(&self) -> &[u64; LEVELS] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Normalized histogram `p(g) = h(g) / total`.
    pub fn pmf(&self) -> Result<Pmf> {
        if self.total == 0 {
            return Err(Error::EmptyHistogram);
        }
        let n = self.total as f64;
        let mut p = [0.0; LEVELS];
        for (dst, &c) in p.iter_mut().zip(&self.counts) {
            *dst = c as f64 / n;
        }
        Ok(Pmf(p))
    }
}

/// Same as [`Histogram::of`].
pub fn build_histogram(img: &GrayImage) -> Histogram {
    Histogram::of(img)
}

/// Probability mass over the 256 gray levels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pmf(pub [f64; LEVELS]);

impl Pmf {
    pub fn get(&self, g: u8) -> f64 {
        self.0[g as usize]
    }

    /// `P(g) = sum of p(0..=g)`.
    pub fn cumulative(&self, g: usize) -> Result<f64> {
        if g >= LEVELS {
            return Err(Error::GrayLevelOutOfRange(g));
        }
        Ok(self.0[..=g].iter().sum())
    }

    /// Class probabilities and entropies for the split `g <= t` versus `g > t`.
    pub fn class_stats(&self, t: u8) -> Result<ClassStats> {
        let split = t as usize + 1;
        let (fg, bg) = self.0.split_at(split);
        let p_fg: f64 = fg.iter().sum();
        let p_bg: f64 = bg.iter().sum();
        if p_fg <= 0.0 || p_bg <= 0.0 {
            return Err(Error::EmptyClass { threshold: t });
        }
        let h_fg = class_entropy(fg, p_fg);
        let h_bg = class_entropy(bg, p_bg);
        Ok(ClassStats {
            p_foreground: p_fg,
            p_background: p_bg,
            h_foreground: h_fg,
            h_background: h_bg,
            h_total: h_fg + h_bg,
        })
    }
}

// Entropy of the class-normalized distribution; 0 ln 0 counts as 0.
fn class_entropy(p: &[f64], class_p: f64) -> f64 {
    p.iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| {
            let q = v / class_p;
            -q * libm::log(q)
        })
        .sum()
}

/// Foreground (`g <= T`) and background (`g > T`) statistics at threshold `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassStats {
    pub p_foreground: f64,
    pub p_background: f64,
    pub h_foreground: f64,
    pub h_background: f64,
    /// `h_foreground + h_background`.
    pub h_total: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{gen_constant, gen_vertical_split};
    use alloc::vec;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn self_information_anchors() {
        assert_eq!(self_information(1.0, LogBase::Two).unwrap(), 0.0);
        assert!(close(
            self_information(0.5, LogBase::Two).unwrap(),
            1.0,
            1e-12
        ));
        assert!(close(
            self_information(0.25, LogBase::Two).unwrap(),
            2.0,
            1e-12
        ));
        assert!(close(
            self_information(0.5, LogBase::E).unwrap(),
            core::f64::consts::LN_2,
            1e-12
        ));
        assert_eq!(
            self_information(0.0, LogBase::Two),
            Err(Error::InvalidProbability)
        );
        assert_eq!(
            self_information(1.5, LogBase::E),
            Err(Error::InvalidProbability)
        );
    }

    #[test]
    fn window_entropy_anchors() {
        assert!(close(window_entropy(4.0 / 9.0).unwrap(), 0.3604, 5e-5));
        assert!(close(window_entropy(2.0 / 9.0).unwrap(), 0.3342, 5e-5));
        assert_eq!(window_entropy(1.0).unwrap(), 0.0);
        assert!(close(window_entropy(1.0 / 9.0).unwrap(), 0.24414, 5e-5));
        assert!(window_entropy(0.0).is_err());
        assert!(window_entropy(-0.1).is_err());
    }

    #[test]
    fn histogram_counts() {
        let h = Histogram::of(&gen_constant(2, 2, 5).unwrap());
        assert_eq!(h.counts()[5], 4);
        assert_eq!(h.counts().iter().sum::<u64>(), 4);
        let img = GrayImage::new(2, 2, vec![0, 255, 255, 0]).unwrap();
        let h = build_histogram(&img);
        assert_eq!((h.counts()[0], h.counts()[255], h.total()), (2, 2, 4));
    }

    #[test]
    fn pmf_and_cumulative() {
        let pmf = Histogram::of(&gen_constant(3, 3, 5).unwrap())
            .pmf()
            .unwrap();
        assert_eq!(pmf.get(5), 1.0);
        assert_eq!(pmf.cumulative(4).unwrap(), 0.0);
        assert_eq!(pmf.cumulative(5).unwrap(), 1.0);
        assert_eq!(pmf.cumulative(255).unwrap(), 1.0);
        assert_eq!(pmf.cumulative(256), Err(Error::GrayLevelOutOfRange(256)));

        let half = Histogram::of(&gen_vertical_split(4, 2, 50, 150).unwrap())
            .pmf()
            .unwrap();
        assert_eq!((half.get(50), half.get(150)), (0.5, 0.5));

        assert_eq!(
            Histogram::from_counts([0; LEVELS]).pmf(),
            Err(Error::EmptyHistogram)
        );
    }

    #[test]
    fn class_stats_of_point_masses() {
        let pmf = Histogram::of(&gen_vertical_split(4, 2, 50, 150).unwrap())
            .pmf()
            .unwrap();
        let s = pmf.class_stats(100).unwrap();
        assert_eq!((s.p_foreground, s.p_background), (0.5, 0.5));
        assert_eq!((s.h_foreground, s.h_background, s.h_total), (0.0, 0.0, 0.0));
        assert_eq!(
            pmf.class_stats(150),
            Err(Error::EmptyClass { threshold: 150 })
        );
        assert_eq!(
            pmf.class_stats(10),
            Err(Error::EmptyClass { threshold: 10 })
        );
    }

    #[test]
    fn class_stats_of_uniform_pmf() {
        let pmf = Histogram::from_counts([3; LEVELS]).pmf().unwrap();
        let s = pmf.class_stats(127).unwrap();
        // Independent route: sum -q ln q over 128 equiprobable levels.
        let q: f64 = 1.0 / 128.0;
        let oracle: f64 = (0..128).map(|_| -q * q.ln()).sum();
        assert!(close(oracle, 128f64.ln(), 1e-12));
        assert!(close(s.h_foreground, oracle, 1e-12));
        assert!(close(s.h_background, oracle, 1e-12));
        assert!(close(s.h_total, 2.0 * oracle, 1e-12));
        assert!(close(s.p_foreground + s.p_background, 1.0, 1e-12));
    }
}
