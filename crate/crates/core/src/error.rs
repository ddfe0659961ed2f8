use core::fmt;

/// Errors raised by image construction, tiling, entropy evaluation and the
/// pipelines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Width or height is zero.
    ZeroDimension,
    /// Pixel buffer length does not equal `width * height`.
    BufferSize { expected: usize, actual: usize },
    /// A binary image value other than 0 or 1.
    NotBinary { index: usize, value: u8 },
    /// The requested grid has more rows or columns than the image.
    GridExceedsImage {
        rows: usize,
        cols: usize,
        width: usize,
        height: usize,
    },
    /// A grid with zero rows or columns.
    EmptyGrid,
    /// A part's rectangle falls (partly) outside the target image.
    PartOutOfBounds { part: usize },
    /// A part's pixel grid does not have the size of its rectangle.
    PartDimensionMismatch { part: usize },
    /// Two parts cover the same pixel.
    Overlap { x: usize, y: usize },
    /// No part covers a pixel.
    Gap { x: usize, y: usize },
    /// Probability outside `(0, 1]`.
    InvalidProbability,
    /// Gray level outside `0..=255`.
    GrayLevelOutOfRange(usize),
    /// A threshold split leaves one class with zero probability.
    EmptyClass { threshold: u8 },
    /// Histogram with no samples.
    EmptyHistogram,
    /// 3×3 match count outside `1..=9`.
    CountOutOfRange(u32),
    /// A window centre on the image border.
    BorderCoordinate { x: usize, y: usize },
    /// Edge detection needs at least a 3×3 image.
    ImageTooSmall { width: usize, height: usize },
    /// `init_low > init_high`, zero iteration cap, or a non-positive entropy threshold.
    InvalidConfig(&'static str),
    /// Number of per-region initial thresholds differs from the region count.
    InitCountMismatch { expected: usize, actual: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDimension => write!(f, "image dimensions must be positive"),
            Error::BufferSize { expected, actual } => {
                write!(f, "pixel buffer has {actual} values, expected {expected}")
            }
            Error::NotBinary { index, value } => {
                write!(
                    f,
                    "binary image value {value} at index {index} is not 0 or 1"
                )
            }
            Error::GridExceedsImage {
                rows,
                cols,
                width,
                height,
            } => write!(
                f,
                "grid {rows}x{cols} does not fit a {width}x{height} image"
            ),
            Error::EmptyGrid => write!(f, "grid must have at least one row and one column"),
            Error::PartOutOfBounds { part } => write!(f, "part {part} lies outside the image"),
            Error::PartDimensionMismatch { part } => {
                write!(f, "part {part} does not match its rectangle")
            }
            Error::Overlap { x, y } => write!(f, "parts overlap at ({x}, {y})"),
            Error::Gap { x, y } => write!(f, "no part covers ({x}, {y})"),
            Error::InvalidProbability => write!(f, "probability must lie in (0, 1]"),
            Error::GrayLevelOutOfRange(g) => write!(f, "gray level {g} is outside 0..=255"),
            Error::EmptyClass { threshold } => {
                write!(
                    f,
                    "threshold {threshold} leaves a class with zero probability"
                )
            }
            Error::EmptyHistogram => write!(f, "histogram has no samples"),
            Error::CountOutOfRange(c) => write!(f, "match count {c} is outside 1..=9"),
            Error::BorderCoordinate { x, y } => {
                write!(
                    f,
                    "({x}, {y}) is on the border; a full 3x3 window is required"
                )
            }
            Error::ImageTooSmall { width, height } => {
                write!(f, "image {width}x{height} is smaller than 3x3")
            }
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
            Error::InitCountMismatch { expected, actual } => write!(
                f,
                "{actual} initial thresholds given for {expected} regions"
            ),
        }
    }
}

impl core::error::Error for Error {}
