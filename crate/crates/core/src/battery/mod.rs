//! Statistical randomness battery.
//!
//! Eight tests from NIST SP 800-22 (frequency, block frequency, runs, longest
//! run of ones, spectral DFT, cumulative sums, serial, approximate entropy)
//! and the uniformity check over the P-values of many sequences that decides
//! whether a generator passes.
//!
//! Every test enforces the minimum input size recommended by NIST unless it
//! is called with [`Strictness::Relaxed`], which only keeps the minimum needed
//! for the statistic to be defined.

mod cusum;
mod frequency;
mod report;
mod runs;
mod serial;
mod spectral;
mod uniformity;

use alloc::vec::Vec;

use thiserror::Error;

use crate::generator::GeneratorError;

pub use cusum::cumulative_sums;
pub use frequency::{block_frequency, frequency_monobit, DEFAULT_BLOCK_LEN};
pub use report::{run_battery, BatteryOptions, BatteryReport, TestSummary};
pub use runs::{longest_run, runs_test};
pub use serial::{approximate_entropy, serial, DEFAULT_APEN_M, DEFAULT_SERIAL_M};
pub use spectral::spectral_dft;
pub use uniformity::{
    p_uniformity, p_uniformity_with_min, Uniformity, DEFAULT_MIN_SEQUENCES, UNIFORMITY_THRESHOLD,
};

/// Whether NIST minimum input sizes are enforced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strictness {
    #[default]
    Strict,
    Relaxed,
}

impl Strictness {
    fn pick(self, strict: usize, relaxed: usize) -> usize {
        match self {
            Strictness::Strict => strict,
            Strictness::Relaxed => relaxed,
        }
    }
}

/// Outcome of one test on one sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct TestResult {
    pub test: &'static str,
    pub statistic: f64,
    pub p_value: f64,
    pub params: Vec<(&'static str, f64)>,
    /// Set when a prerequisite of the test did not hold; `p_value` is then 0.
    pub prerequisite_failed: bool,
}

impl TestResult {
    fn new(test: &'static str, statistic: f64, p_value: f64) -> Self {
        Self {
            test,
            statistic,
            p_value: p_value.clamp(0.0, 1.0),
            params: Vec::new(),
            prerequisite_failed: false,
        }
    }

    fn with_param(mut self, name: &'static str, value: f64) -> Self {
        self.params.push((name, value));
        self
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
    }

    pub fn passed(&self, alpha: f64) -> bool {
        self.p_value >= alpha
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BatteryError {
    #[error("{test}: sequence of {len} bits is shorter than the minimum {min}")]
    TooShort {
        test: &'static str,
        len: usize,
        min: usize,
    },
    #[error("{test}: {reason}")]
    InvalidParameter {
        test: &'static str,
        reason: &'static str,
    },
    #[error("no P-values to aggregate")]
    NoPValues,
    #[error("battery needs a time-derived master seed")]
    MasterSeedRequired,
    #[error("sequence {index} (seed t = {t}): {source}")]
    Sequence {
        index: usize,
        t: u64,
        source: GeneratorError,
    },
}

fn require_len(
    test: &'static str,
    bits: &[bool],
    strictness: Strictness,
    strict: usize,
    relaxed: usize,
) -> Result<usize, BatteryError> {
    let min = strictness.pick(strict, relaxed);
    if bits.len() < min {
        return Err(BatteryError::TooShort {
            test,
            len: bits.len(),
            min,
        });
    }
    Ok(bits.len())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use alloc::vec::Vec;

    use crate::bits::parse_ascii;

    /// The 100-bit example sequence used throughout SP 800-22.
    pub const EPS100: &str = "1100100100001111110110101010001000100001011010001100001000110100110001001100011001100010100010111000";

    pub fn bits(text: &str) -> Vec<bool> {
        parse_ascii(text).unwrap()
    }

    pub fn alternating(n: usize) -> Vec<bool> {
        (0..n).map(|i| i % 2 == 1).collect()
    }

    /// Deterministic pseudo-random bits from a 64-bit LCG, for shape checks.
    pub fn lcg_bits(n: usize, seed: u64) -> Vec<bool> {
        let mut s = seed;
        (0..n)
            .map(|_| {
                s = s
                    .wrapping_mul(6_364_136_223_846_793_005)
                    .wrapping_add(1_442_695_040_888_963_407);
                s >> 63 == 1
            })
            .collect()
    }

    pub fn assert_close(actual: f64, expected: f64, tol: f64) {
        assert!(
            (actual - expected).abs() <= tol,
            "{actual} vs {expected} (tol {tol})"
        );
    }
}
