//! Binary PGM (`P5`, maxval 255) reading and writing.

use std::io::{self, Write};

use chaotic_prng::cipher::{CipherError, GrayscaleImage};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PgmError {
    #[error("not a binary PGM file (expected magic `P5`)")]
    Magic,
    #[error("truncated or malformed header: {0}")]
    Header(&'static str),
    #[error("maxval {0} unsupported; only 8-bit images with maxval 255 are handled")]
    MaxVal(u32),
    #[error("raster holds {found} bytes, expected {expected}")]
    Raster { expected: usize, found: usize },
    #[error(transparent)]
    Image(#[from] CipherError),
}

struct Header<'a> {
    data: &'a [u8],
    pos: usize,
}

impl Header<'_> {
    // whitespace and `#` comments up to end of line
    fn skip_space(&mut self) {
        while let Some(&c) = self.data.get(self.pos) {
            if c == b'#' {
                while self
                    .data
                    .get(self.pos)
                    .is_some_and(|&c| c != b'\n' && c != b'\r')
                {
                    self.pos += 1;
                }
            } else if c.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &'static str) -> Result<u32, PgmError> {
        self.skip_space();
        let start = self.pos;
        while self.data.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.data[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(PgmError::Header(what))
    }
}

/// Parses a `P5` image. Header tokens may be separated by any whitespace and
/// `#` comments; exactly one whitespace byte separates maxval from the
/// raster. Bytes after the raster are ignored.
pub fn read_pgm(data: &[u8]) -> Result<GrayscaleImage, PgmError> {
    if !data.starts_with(b"P5") {
        return Err(PgmError::Magic);
    }
    let mut h = Header { data, pos: 2 };
    if !h
        .data
        .get(2)
        .is_some_and(|c| c.is_ascii_whitespace() || *c == b'#')
    {
        return Err(PgmError::Magic);
    }
    let width = h.number("width")? as usize;
    let height = h.number("height")? as usize;
    let maxval = h.number("maxval")?;
    if maxval != 255 {
        return Err(PgmError::MaxVal(maxval));
    }
    if !data.get(h.pos).is_some_and(u8::is_ascii_whitespace) {
        return Err(PgmError::Header("whitespace after maxval"));
    }
    let raster = &data[h.pos + 1..];
    let expected = width.saturating_mul(height);
    if raster.len() < expected {
        return Err(PgmError::Raster {
            expected,
            found: raster.len(),
        });
    }
    Ok(GrayscaleImage::new(
        width,
        height,
        raster[..expected].to_vec(),
    )?)
}

pub fn write_pgm<W: Write>(mut w: W, image: &GrayscaleImage) -> io::Result<()> {
    write!(w, "P5\n{} {}\n255\n", image.width(), image.height())?;
    w.write_all(image.pixels())?;
    w.flush()
}
