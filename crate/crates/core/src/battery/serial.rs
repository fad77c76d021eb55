use alloc::vec;
use alloc::vec::Vec;

use super::{BatteryError, Strictness, TestResult};
use crate::special::igamc;

pub const DEFAULT_SERIAL_M: usize = 10;
pub const DEFAULT_APEN_M: usize = 10;

/// Largest pattern length the counters accept.
const MAX_PATTERN: usize = 24;

/// Counts of every overlapping `m`-bit pattern, the sequence wrapped around
/// by `m - 1` bits. Index is the pattern read big-endian.
fn pattern_counts(bits: &[bool], m: usize) -> Vec<u64> {
    let mut counts = vec![0u64; 1 << m];
    if m == 0 {
        counts[0] = bits.len() as u64;
        return counts;
    }
    let mask = (1usize << m) - 1;
    let mut window = bits[..m - 1]
        .iter()
        .fold(0usize, |acc, &b| (acc << 1) | usize::from(b));
    for &b in bits.iter().chain(&bits[..m - 1]).skip(m - 1) {
        window = ((window << 1) | usize::from(b)) & mask;
        counts[window] += 1;
    }
    counts
}

fn psi_sq(bits: &[bool], m: usize) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let n = bits.len() as f64;
    let sum_sq: f64 = pattern_counts(bits, m)
        .iter()
        .map(|&c| (c * c) as f64)
        .sum();
    (1u64 << m) as f64 / n * sum_sq - n
}

fn log2_floor(n: usize) -> usize {
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

fn check_pattern_len(
    test: &'static str,
    bits: &[bool],
    m: usize,
    min_m: usize,
    headroom: usize,
    strictness: Strictness,
) -> Result<(), BatteryError> {
    if m < min_m || m > MAX_PATTERN {
        return Err(BatteryError::InvalidParameter {
            test,
            reason: "pattern length out of range",
        });
    }
    if bits.len() < m {
        return Err(BatteryError::TooShort {
            test,
            len: bits.len(),
            min: m,
        });
    }
    // recommended: m < floor(log2 n) - headroom
    if strictness == Strictness::Strict && m + headroom >= log2_floor(bits.len()) {
        return Err(BatteryError::TooShort {
            test,
            len: bits.len(),
            min: 1 << (m + headroom + 1),
        });
    }
    Ok(())
}

/// Serial test with pattern length `m`: the two statistics `del psi^2_m`
/// and `del^2 psi^2_m`, in that order.
pub fn serial(
    bits: &[bool],
    m: usize,
    strictness: Strictness,
) -> Result<(TestResult, TestResult), BatteryError> {
    check_pattern_len("serial", bits, m, 2, 2, strictness)?;
    let p0 = psi_sq(bits, m);
    let p1 = psi_sq(bits, m - 1);
    let p2 = psi_sq(bits, m - 2);
    // both are non-negative in exact arithmetic
    let del1 = (p0 - p1).max(0.0);
    let del2 = (p0 - 2.0 * p1 + p2).max(0.0);
    let mf = m as f64;
    let first = TestResult::new("serial.1", del1, igamc(libm::exp2(mf - 2.0), del1 / 2.0))
        .with_param("m", mf);
    let second = TestResult::new("serial.2", del2, igamc(libm::exp2(mf - 3.0), del2 / 2.0))
        .with_param("m", mf);
    Ok((first, second))
}

fn phi(bits: &[bool], m: usize) -> f64 {
    if m == 0 {
        return 0.0;
    }
    let n = bits.len() as f64;
    pattern_counts(bits, m)
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let pi = c as f64 / n;
            pi * libm::log(pi)
        })
        .sum()
}

/// Approximate entropy test comparing overlapping `m`- and `(m+1)`-bit
/// pattern frequencies.
pub fn approximate_entropy(
    bits: &[bool],
    m: usize,
    strictness: Strictness,
) -> Result<TestResult, BatteryError> {
    const NAME: &str = "approximate_entropy";
    check_pattern_len(NAME, bits, m, 1, 5, strictness)?;
    let n = bits.len() as f64;
    let apen = phi(bits, m) - phi(bits, m + 1);
    // ApEn never exceeds ln 2 in exact arithmetic
    let chi_sq = (2.0 * n * (core::f64::consts::LN_2 - apen)).max(0.0);
    let p = igamc(libm::exp2(m as f64 - 1.0), chi_sq / 2.0);
    Ok(TestResult::new(NAME, chi_sq, p)
        .with_param("m", m as f64)
        .with_param("apen", apen))
}
