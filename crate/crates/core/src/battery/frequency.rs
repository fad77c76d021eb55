use core::f64::consts::FRAC_1_SQRT_2;

use super::{require_len, BatteryError, Strictness, TestResult};
use crate::special::{erfc, igamc};

/// Block length used by the scheme comparison runs.
pub const DEFAULT_BLOCK_LEN: usize = 20_000;

/// Frequency (monobit) test: balance of ones and zeros over the whole
/// sequence.
pub fn frequency_monobit(
    bits: &[bool],
    strictness: Strictness,
) -> Result<TestResult, BatteryError> {
    let n = require_len("frequency", bits, strictness, 100, 1)?;
    let sum: i64 = bits.iter().map(|&b| if b { 1 } else { -1 }).sum();
    let s_obs = sum.unsigned_abs() as f64 / libm::sqrt(n as f64);
    let p = erfc(s_obs * FRAC_1_SQRT_2);
    Ok(TestResult::new("frequency", s_obs, p))
}

/// Frequency test within blocks of `block_len` bits; the tail that does not
/// fill a block is ignored.
pub fn block_frequency(
    bits: &[bool],
    block_len: usize,
    strictness: Strictness,
) -> Result<TestResult, BatteryError> {
    const NAME: &str = "block_frequency";
    let n = require_len(NAME, bits, strictness, 100, 1)?;
    if block_len < strictness.pick(20, 1) {
        return Err(BatteryError::InvalidParameter {
            test: NAME,
            reason: "block length below 20",
        });
    }
    let blocks = n / block_len;
    if blocks == 0 {
        return Err(BatteryError::TooShort {
            test: NAME,
            len: n,
            min: block_len,
        });
    }
    let chi_sq: f64 = bits
        .chunks_exact(block_len)
        .map(|block| {
            let ones = block.iter().filter(|&&b| b).count();
            let dev = ones as f64 / block_len as f64 - 0.5;
            dev * dev
        })
        .sum::<f64>()
        * 4.0
        * block_len as f64;
    let p = igamc(blocks as f64 / 2.0, chi_sq / 2.0);
    Ok(TestResult::new(NAME, chi_sq, p)
        .with_param("block_len", block_len as f64)
        .with_param("blocks", blocks as f64))
}
