//! 8-bit PGM (P2 ASCII and P5 binary).
//!
//! Headers may carry `#` comments. Samples are returned as stored; images
//! with `maxval < 255` are not rescaled. Written files always use maxval 255.

use std::fmt;

use entedge_core::GrayImage;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PgmError {
    /// Not `P2` or `P5`.
    BadMagic,
    /// Missing or non-numeric header field.
    MalformedHeader(&'static str),
    /// Maxval of 0.
    ZeroMaxval,
    /// 16-bit files are not supported.
    MaxvalTooLarge(u32),
    ZeroDimension,
    /// Fewer samples than `width * height`.
    Truncated {
        expected: usize,
        actual: usize,
    },
    /// A P2 sample that is not a decimal number.
    BadSample {
        index: usize,
    },
    /// A sample larger than the declared maxval.
    SampleOutOfRange {
        index: usize,
        value: u32,
        maxval: u32,
    },
}

impl fmt::Display for PgmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PgmError::BadMagic => write!(f, "not a PGM file (expected magic P2 or P5)"),
            PgmError::MalformedHeader(field) => write!(f, "malformed PGM header: bad {field}"),
            PgmError::ZeroMaxval => write!(f, "PGM maxval must be at least 1"),
            PgmError::MaxvalTooLarge(m) => write!(
                f,
                "PGM maxval {m} exceeds 255; 16-bit files are unsupported"
            ),
            PgmError::ZeroDimension => write!(f, "PGM width and height must be positive"),
            PgmError::Truncated { expected, actual } => {
                write!(
                    f,
                    "PGM pixel data truncated: {actual} of {expected} samples"
                )
            }
            PgmError::BadSample { index } => write!(f, "PGM sample {index} is not a number"),
            PgmError::SampleOutOfRange {
                index,
                value,
                maxval,
            } => {
                write!(f, "PGM sample {index} = {value} exceeds maxval {maxval}")
            }
        }
    }
}

impl std::error::Error for PgmError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self
                    .bytes
                    .get(self.pos)
                    .is_some_and(|&c| c != b'\n' && c != b'\r')
                {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    /// Next unsigned decimal, or `None` if absent or not numeric.
    fn number(&mut self) -> Option<u32> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        if self
            .bytes
            .get(self.pos)
            .is_some_and(|&b| !b.is_ascii_whitespace() && b != b'#')
        {
            return None;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()?
            .parse()
            .ok()
    }
}

pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage, PgmError> {
    let ascii = match bytes.get(..2) {
        Some(b"P2") => true,
        Some(b"P5") => false,
        _ => return Err(PgmError::BadMagic),
    };
    if bytes
        .get(2)
        .is_some_and(|&b| !b.is_ascii_whitespace() && b != b'#')
    {
        return Err(PgmError::BadMagic);
    }
    let mut cur = Cursor { bytes, pos: 2 };
    let width = cur.number().ok_or(PgmError::MalformedHeader("width"))? as usize;
    let height = cur.number().ok_or(PgmError::MalformedHeader("height"))? as usize;
    let maxval = cur.number().ok_or(PgmError::MalformedHeader("maxval"))?;
    if width == 0 || height == 0 {
        return Err(PgmError::ZeroDimension);
    }
    if maxval == 0 {
        return Err(PgmError::ZeroMaxval);
    }
    if maxval > 255 {
        return Err(PgmError::MaxvalTooLarge(maxval));
    }
    let expected = width
        .checked_mul(height)
        .ok_or(PgmError::MalformedHeader("dimensions"))?;

    let pixels = if ascii {
        let mut pixels = Vec::with_capacity(expected);
        for index in 0..expected {
            cur.skip_space_and_comments();
            if cur.pos >= bytes.len() {
                return Err(PgmError::Truncated {
                    expected,
                    actual: index,
                });
            }
            let value = cur.number().ok_or(PgmError::BadSample { index })?;
            if value > maxval {
                return Err(PgmError::SampleOutOfRange {
                    index,
                    value,
                    maxval,
                });
            }
            pixels.push(value as u8);
        }
        pixels
    } else {
        // Exactly one whitespace byte separates maxval from the raster.
        let start = cur.pos + 1;
        let raster = bytes.get(start..).unwrap_or(&[]);
        if raster.len() < expected {
            return Err(PgmError::Truncated {
                expected,
                actual: raster.len(),
            });
        }
        let raster = &raster[..expected];
        if let Some((index, &v)) = raster
            .iter()
            .enumerate()
            .find(|(_, &v)| u32::from(v) > maxval)
        {
            return Err(PgmError::SampleOutOfRange {
                index,
                value: u32::from(v),
                maxval,
            });
        }
        raster.to_vec()
    };
    Ok(GrayImage::new(width, height, pixels).expect("dimensions checked above"))
}

/// Encodes `img` with maxval 255; P2 writes one image row per line.
pub fn write_pgm(img: &GrayImage, ascii: bool) -> Vec<u8> {
    let magic = if ascii { "P2" } else { "P5" };
    let mut out = format!("{magic}\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    if ascii {
        for row in img.pixels().chunks(img.width()) {
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            out.extend_from_slice(line.join(" ").as_bytes());
            out.push(b'\n');
        }
    } else {
        out.extend_from_slice(img.pixels());
    }
    out
}
