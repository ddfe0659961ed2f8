//! Grayscale and binary rasters, and their tiling into regions.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Row-major 8-bit grayscale image.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        check_dims(width, height, pixels.len())?;
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    /// Builds an image by evaluating `f(x, y)` for every pixel.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> u8,
    ) -> Result<Self> {
        check_dims(width, height, width.saturating_mul(height))?;
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }

    /// Copies out the pixels under `rect`.
    pub fn crop(&self, rect: Rect) -> Result<GrayImage> {
        if rect.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if rect.bottom() > self.height || rect.right() > self.width {
            return Err(Error::PartOutOfBounds { part: 0 });
        }
        let mut pixels = Vec::with_capacity(rect.area());
        for y in rect.top..rect.bottom() {
            let row = y * self.width;
            pixels.extend_from_slice(&self.pixels[row + rect.left..row + rect.right()]);
        }
        Ok(GrayImage {
            width: rect.width,
            height: rect.height,
            pixels,
        })
    }
}

/// Row-major image whose values are 0 or 1.
///
/// Serves both as the thresholded intermediate and as the edge map, where 1
/// marks an edge pixel.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryImage {
    width: usize,
    height: usize,
    bits: Vec<u8>,
}

impl BinaryImage {
    pub fn new(width: usize, height: usize, bits: Vec<u8>) -> Result<Self> {
        check_dims(width, height, bits.len())?;
        if let Some((index, &value)) = bits.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(Error::NotBinary { index, value });
        }
        Ok(Self {
            width,
            height,
            bits,
        })
    }

    pub fn zeros(width: usize, height: usize) -> Result<Self> {
        check_dims(width, height, width.saturating_mul(height))?;
        Ok(Self {
            width,
            height,
            bits: vec![0; width * height],
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.bits[y * self.width + x]
    }

    pub(crate) fn set(&mut self, x: usize, y: usize, v: u8) {
        debug_assert!(v <= 1);
        self.bits[y * self.width + x] = v;
    }

    /// Number of pixels set to 1.
    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// Bitwise complement.
    pub fn not(&self) -> BinaryImage {
        BinaryImage {
            width: self.width,
            height: self.height,
            bits: self.bits.iter().map(|&b| 1 - b).collect(),
        }
    }

    /// Renders 0 as black (0) and 1 as white (255).
    pub fn to_gray(&self) -> GrayImage {
        GrayImage {
            width: self.width,
            height: self.height,
            pixels: self
                .bits
                .iter()
                .map(|&b| if b == 1 { 255 } else { 0 })
                .collect(),
        }
    }
}

/// Same as [`BinaryImage::to_gray`].
pub fn binary_to_gray(bin: &BinaryImage) -> GrayImage {
    bin.to_gray()
}

fn check_dims(width: usize, height: usize, len: usize) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::ZeroDimension);
    }
    let expected = width.checked_mul(height).ok_or(Error::BufferSize {
        expected: usize::MAX,
        actual: len,
    })?;
    if expected != len {
        return Err(Error::BufferSize {
            expected,
            actual: len,
        });
    }
    Ok(())
}

/// Axis-aligned rectangle in parent-image coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub top: usize,
    pub left: usize,
    pub height: usize,
    pub width: usize,
}

impl Rect {
    pub fn new(top: usize, left: usize, height: usize, width: usize) -> Self {
        Self {
            top,
            left,
            height,
            width,
        }
    }

    pub fn bottom(&self) -> usize {
        self.top + self.height
    }

    pub fn right(&self) -> usize {
        self.left + self.width
    }

    pub fn area(&self) -> usize {
        self.width * self.height
    }

    pub fn is_empty(&self) -> bool {
        self.width == 0 || self.height == 0
    }
}

/// A `rows × cols` tiling of a `width × height` image.
///
/// Every region is `floor(height / rows)` tall and `floor(width / cols)`
/// wide, except the last row and column, which absorb the remainder.
/// Regions are stored in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionGrid {
    rows: usize,
    cols: usize,
    regions: Vec<Rect>,
}

impl RegionGrid {
    pub fn new(rows: usize, cols: usize, width: usize, height: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyGrid);
        }
        if width == 0 || height == 0 {
            return Err(Error::ZeroDimension);
        }
        if rows > height || cols > width {
            return Err(Error::GridExceedsImage {
                rows,
                cols,
                width,
                height,
            });
        }
        let (row_h, col_w) = (height / rows, width / cols);
        let mut regions = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let top = r * row_h;
            let h = if r + 1 == rows { height - top } else { row_h };
            for c in 0..cols {
                let left = c * col_w;
                let w = if c + 1 == cols { width - left } else { col_w };
                regions.push(Rect::new(top, left, h, w));
            }
        }
        Ok(Self {
            rows,
            cols,
            regions,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn regions(&self) -> &[Rect] {
        &self.regions
    }
}

/// Splits `img` into the regions of a `rows × cols` grid, row-major.
pub fn split_regions(img: &GrayImage, rows: usize, cols: usize) -> Result<Vec<(GrayImage, Rect)>> {
    let grid = RegionGrid::new(rows, cols, img.width(), img.height())?;
    grid.regions()
        .iter()
        .map(|&r| Ok((img.crop(r)?, r)))
        .collect()
}

/// Copies each part into its rectangle of a `width × height` binary image.
///
/// The rectangles must tile the target exactly.
pub fn assemble_regions(
    parts: &[(BinaryImage, Rect)],
    width: usize,
    height: usize,
) -> Result<BinaryImage> {
    if width == 0 || height == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut out = vec![0u8; width * height];
    let mut covered = vec![false; width * height];
    for (i, (part, rect)) in parts.iter().enumerate() {
        if rect.bottom() > height || rect.right() > width {
            return Err(Error::PartOutOfBounds { part: i });
        }
        if part.width() != rect.width || part.height() != rect.height {
            return Err(Error::PartDimensionMismatch { part: i });
        }
        for dy in 0..rect.height {
            let y = rect.top + dy;
            for dx in 0..rect.width {
                let x = rect.left + dx;
                let idx = y * width + x;
                if covered[idx] {
                    return Err(Error::Overlap { x, y });
                }
                covered[idx] = true;
                out[idx] = part.get(dx, dy);
            }
        }
    }
    if let Some(idx) = covered.iter().position(|&c| !c) {
        return Err(Error::Gap {
            x: idx % width,
            y: idx / width,
        });
    }
    BinaryImage::new(width, height, out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp(w: usize, h: usize) -> GrayImage {
        GrayImage::from_fn(w, h, |x, y| ((x * 7 + y * 13) % 256) as u8).unwrap()
    }

    #[test]
    fn rejects_bad_buffers() {
        assert_eq!(GrayImage::new(0, 3, vec![]), Err(Error::ZeroDimension));
        assert_eq!(
            GrayImage::new(2, 2, vec![0; 3]),
            Err(Error::BufferSize {
                expected: 4,
                actual: 3
            })
        );
        assert_eq!(
            BinaryImage::new(2, 1, vec![0, 2]),
            Err(Error::NotBinary { index: 1, value: 2 })
        );
    }

    #[test]
    fn binary_to_gray_maps_one_to_white() {
        let bin = BinaryImage::new(2, 1, vec![0, 1]).unwrap();
        assert_eq!(binary_to_gray(&bin).pixels(), &[0, 255]);
        let zeros = BinaryImage::zeros(3, 2).unwrap();
        assert!(binary_to_gray(&zeros).pixels().iter().all(|&p| p == 0));
    }

    #[test]
    fn gray_of_binary_is_invertible() {
        let bin = BinaryImage::new(3, 1, vec![1, 0, 1]).unwrap();
        let gray = bin.to_gray();
        let back: Vec<u8> = gray.pixels().iter().map(|&p| (p == 255) as u8).collect();
        assert_eq!(back, bin.bits());
    }

    #[test]
    fn split_even_image_into_quadrants() {
        let img = ramp(4, 4);
        let parts = split_regions(&img, 2, 2).unwrap();
        assert_eq!(parts.len(), 4);
        for (part, rect) in &parts {
            assert_eq!((part.width(), part.height()), (2, 2));
            assert_eq!(part.get(1, 1), img.get(rect.left + 1, rect.top + 1));
        }
    }

    #[test]
    fn split_odd_image_gives_remainder_to_last_row_and_column() {
        let img = ramp(5, 5);
        let sizes: Vec<(usize, usize)> = split_regions(&img, 2, 2)
            .unwrap()
            .iter()
            .map(|(p, _)| (p.height(), p.width()))
            .collect();
        assert_eq!(sizes, vec![(2, 2), (2, 3), (3, 2), (3, 3)]);
    }

    #[test]
    fn one_by_one_split_is_identity() {
        let img = ramp(6, 3);
        let parts = split_regions(&img, 1, 1).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, img);
        assert_eq!(parts[0].1, Rect::new(0, 0, 3, 6));
    }

    #[test]
    fn grid_larger_than_image_is_rejected() {
        let img = ramp(3, 2);
        assert!(matches!(
            split_regions(&img, 3, 1),
            Err(Error::GridExceedsImage { .. })
        ));
        assert!(matches!(
            split_regions(&img, 1, 4),
            Err(Error::GridExceedsImage { .. })
        ));
        assert_eq!(split_regions(&img, 0, 1), Err(Error::EmptyGrid));
    }

    #[test]
    fn assemble_single_part() {
        let bin = BinaryImage::new(2, 2, vec![1, 0, 0, 1]).unwrap();
        let out = assemble_regions(&[(bin.clone(), Rect::new(0, 0, 2, 2))], 2, 2).unwrap();
        assert_eq!(out, bin);
    }

    #[test]
    fn assemble_detects_gap_overlap_and_mismatch() {
        let one = BinaryImage::new(1, 1, vec![1]).unwrap();
        // 2x1 target with only the left pixel covered.
        assert_eq!(
            assemble_regions(&[(one.clone(), Rect::new(0, 0, 1, 1))], 2, 1),
            Err(Error::Gap { x: 1, y: 0 })
        );
        assert_eq!(
            assemble_regions(
                &[
                    (one.clone(), Rect::new(0, 0, 1, 1)),
                    (one.clone(), Rect::new(0, 0, 1, 1))
                ],
                1,
                1
            ),
            Err(Error::Overlap { x: 0, y: 0 })
        );
        assert_eq!(
            assemble_regions(&[(one.clone(), Rect::new(0, 0, 1, 2))], 2, 1),
            Err(Error::PartDimensionMismatch { part: 0 })
        );
        assert_eq!(
            assemble_regions(&[(one, Rect::new(0, 3, 1, 1))], 2, 1),
            Err(Error::PartOutOfBounds { part: 0 })
        );
    }

    #[test]
    fn complement_flips_every_bit() {
        let bin = BinaryImage::new(3, 1, vec![0, 1, 1]).unwrap();
        assert_eq!(bin.not().bits(), &[1, 0, 0]);
        assert_eq!(bin.not().not(), bin);
    }
}
