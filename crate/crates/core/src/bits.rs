//! Bit sequence helpers shared by the generator, the battery and the cipher.
//!
//! Bits travel as `bool` slices. When packed into bytes, the first bit goes to
//! the most significant position of byte 0 and a trailing partial byte is
//! zero-padded in its low bits.

use alloc::string::String;
use alloc::vec::Vec;

/// Packs bits into bytes, most significant bit first.
pub fn pack_msb_first(bits: &[bool]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |byte, (i, &b)| byte | (u8::from(b) << (7 - i)))
        })
        .collect()
}

/// Inverse of [`pack_msb_first`]; returns exactly `count` bits.
///
/// Panics if `bytes` holds fewer than `count` bits.
pub fn unpack_msb_first(bytes: &[u8], count: usize) -> Vec<bool> {
    assert!(
        count <= bytes.len() * 8,
        "not enough bytes for {count} bits"
    );
    (0..count)
        .map(|k| bytes[k / 8] & (0x80 >> (k % 8)) != 0)
        .collect()
}

/// Renders bits as a string of `'0'`/`'1'`.
pub fn to_ascii(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Parses a string of `'0'`/`'1'`, skipping ASCII whitespace.
///
/// Returns `None` on any other character.
pub fn parse_ascii(text: &str) -> Option<Vec<bool>> {
    text.chars()
        .filter(|c| !c.is_ascii_whitespace())
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect()
}

/// Number of ones.
pub fn count_ones(bits: &[bool]) -> usize {
    bits.iter().filter(|&&b| b).count()
}

/// Maps `0 -> -1.0`, `1 -> +1.0`.
pub(crate) fn to_signs(bits: &[bool]) -> Vec<f64> {
    bits.iter().map(|&b| if b { 1.0 } else { -1.0 }).collect()
}
