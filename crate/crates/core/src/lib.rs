//! Entropy-based edge detection for 8-bit grayscale images.
//!
//! The detector binarizes an image with an iterative mean-split global
//! threshold, then marks a pixel as an edge when the Shannon entropy of its
//! 3×3 binary neighbourhood is high enough. Two pipeline variants are
//! provided: one threshold for the whole image, and one threshold per region
//! of an `rows × cols` tiling with a restricted random initial threshold.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, timing and
//! the command-line tool live in the `entedge` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;

pub mod edge;
pub mod entropy;
pub mod image;
pub mod pipeline;
pub mod sweep;
pub mod synth;
pub mod threshold;

pub use edge::{detect_edges, BorderPolicy, EdgeConfig, EdgeRule};
pub use error::Error;
pub use image::{assemble_regions, split_regions, BinaryImage, GrayImage, Rect, RegionGrid};
pub use pipeline::{run_pipeline, PipelineConfig, PipelineResult};
pub use threshold::{iterative_threshold, ThresholdConfig, ThresholdReport};

pub type Result<T, E = Error> = core::result::Result<T, E>;
