//! Bitstream output formats.

use std::io::{self, Write};

use chaotic_prng::bits::pack_msb_first;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// `0`/`1` characters.
    Ascii,
    /// Packed bytes, first bit in the most significant position; a final
    /// partial byte is zero-padded.
    Raw,
}

/// Writes `bits`; in ASCII mode a newline follows every `wrap` characters
/// and ends a nonempty stream (`wrap = 0` disables wrapping).
pub fn write_bits<W: Write>(
    mut w: W,
    bits: &[bool],
    format: Format,
    wrap: usize,
) -> io::Result<()> {
    match format {
        Format::Raw => w.write_all(&pack_msb_first(bits))?,
        Format::Ascii => {
            let chunk = if wrap == 0 { bits.len().max(1) } else { wrap };
            for line in bits.chunks(chunk) {
                let text: Vec<u8> = line.iter().map(|&b| if b { b'1' } else { b'0' }).collect();
                w.write_all(&text)?;
                w.write_all(b"\n")?;
            }
        }
    }
    w.flush()
}
