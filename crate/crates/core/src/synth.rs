//! Deterministic synthetic fixtures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::{Error, GrayImage, Result};

pub fn gen_constant(width: usize, height: usize, value: u8) -> Result<GrayImage> {
    GrayImage::from_fn(width, height, |_, _| value)
}

/// `lo` where `floor(x/cell) + floor(y/cell)` is even, `hi` elsewhere.
pub fn gen_checkerboard(
    width: usize,
    height: usize,
    cell: usize,
    lo: u8,
    hi: u8,
) -> Result<GrayImage> {
    if cell == 0 {
        return Err(Error::InvalidConfig("checkerboard cell must be positive"));
    }
    GrayImage::from_fn(width, height, |x, y| {
        if (x / cell + y / cell).is_multiple_of(2) {
            lo
        } else {
            hi
        }
    })
}

/// Left half (`x < width / 2`) set to `left`, the rest to `right`.
pub fn gen_vertical_split(width: usize, height: usize, left: u8, right: u8) -> Result<GrayImage> {
    let mid = width / 2;
    GrayImage::from_fn(width, height, |x, _| if x < mid { left } else { right })
}

/// Parameters of [`gen_bimodal`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bimodal {
    pub mu1: u8,
    pub mu2: u8,
    /// Standard deviation of the additive Gaussian noise; 0 disables noise.
    pub sigma: f64,
    /// Probability of drawing a pixel from the `mu1` mode.
    pub mix_ratio: f64,
}

/// Independent pixels drawn from a two-mode Gaussian mixture, rounded and
/// clamped to `0..=255`. The stream is ChaCha8 seeded from `seed`.
pub fn gen_bimodal(width: usize, height: usize, params: Bimodal, seed: u64) -> Result<GrayImage> {
    let Bimodal {
        mu1,
        mu2,
        sigma,
        mix_ratio,
    } = params;
    if mu1 >= mu2 {
        return Err(Error::InvalidConfig("bimodal modes must satisfy mu1 < mu2"));
    }
    if !(sigma >= 0.0 && sigma.is_finite()) {
        return Err(Error::InvalidConfig(
            "bimodal sigma must be finite and non-negative",
        ));
    }
    if !(mix_ratio > 0.0 && mix_ratio < 1.0) {
        return Err(Error::InvalidConfig("bimodal mix ratio must lie in (0, 1)"));
    }
    let noise = Normal::new(0.0, sigma).map_err(|_| Error::InvalidConfig("bimodal sigma"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    GrayImage::from_fn(width, height, |_, _| {
        let mode = if rng.random::<f64>() < mix_ratio {
            mu1
        } else {
            mu2
        };
        let v = libm::round(f64::from(mode) + noise.sample(&mut rng));
        v.clamp(0.0, 255.0) as u8
    })
}
