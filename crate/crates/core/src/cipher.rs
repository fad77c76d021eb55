//! One-time-pad encryption of 8-bit grayscale images with the generator's
//! keystream.
//!
//! Pixels are taken in row-major order and XORed with consecutive keystream
//! bytes; keystream bits are packed most significant bit first. Encryption
//! and decryption are the same operation. A keystream must never be reused
//! for two images; picking a fresh seed per image is the caller's job.

use alloc::vec::Vec;

use thiserror::Error;

use crate::bits::pack_msb_first;
use crate::generator::{generate_bits, GeneratorConfig, GeneratorError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CipherError {
    #[error("image dimensions must be positive, got {width}x{height}")]
    EmptyImage { width: usize, height: usize },
    #[error("{width}x{height} image needs {expected} pixels, got {found}")]
    PixelCount {
        width: usize,
        height: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
}

/// 8-bit grayscale raster, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayscaleImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayscaleImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self, CipherError> {
        if width == 0 || height == 0 {
            return Err(CipherError::EmptyImage { width, height });
        }
        let expected = width
            .checked_mul(height)
            .ok_or(CipherError::EmptyImage { width, height })?;
        if pixels.len() != expected {
            return Err(CipherError::PixelCount {
                width,
                height,
                expected,
                found: pixels.len(),
            });
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

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }
}

/// Pixel value counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    pub bins: [u64; 256],
}

impl Histogram {
    pub fn total(&self) -> u64 {
        self.bins.iter().sum()
    }
}

/// `count` keystream bytes: the first `8 * count` generator bits, packed.
pub fn keystream_bytes(config: &GeneratorConfig, count: usize) -> Result<Vec<u8>, GeneratorError> {
    Ok(pack_msb_first(&generate_bits(config, 8 * count)?))
}

/// XORs every pixel with the keystream of a fresh generator for `config`.
pub fn xor_cipher(
    image: &GrayscaleImage,
    config: &GeneratorConfig,
) -> Result<GrayscaleImage, CipherError> {
    let key = keystream_bytes(config, image.pixels.len())?;
    let pixels = image.pixels.iter().zip(&key).map(|(p, k)| p ^ k).collect();
    Ok(GrayscaleImage { pixels, ..*image })
}

pub fn histogram(image: &GrayscaleImage) -> Histogram {
    let mut bins = [0u64; 256];
    for &p in &image.pixels {
        bins[usize::from(p)] += 1;
    }
    Histogram { bins }
}

/// Chi-square distance of the histogram from the flat one; 255 degrees of
/// freedom. Returns NaN for an empty histogram.
pub fn chi_square_uniformity(hist: &Histogram) -> f64 {
    let expected = hist.total() as f64 / 256.0;
    hist.bins
        .iter()
        .map(|&b| {
            let d = b as f64 - expected;
            d * d / expected
        })
        .sum()
}
