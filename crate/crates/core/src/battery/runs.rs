use super::{require_len, BatteryError, Strictness, TestResult};
use crate::special::{erfc, igamc};

/// Runs test: total number of runs of identical bits.
///
/// The frequency prerequisite `|pi - 1/2| < 2/sqrt(n)` gates the test; when
/// it fails the result carries `p = 0` and `prerequisite_failed`.
pub fn runs_test(bits: &[bool], strictness: Strictness) -> Result<TestResult, BatteryError> {
    const NAME: &str = "runs";
    let n = require_len(NAME, bits, strictness, 100, 2)?;
    let nf = n as f64;
    let pi = bits.iter().filter(|&&b| b).count() as f64 / nf;
    let tau = 2.0 / libm::sqrt(nf);
    if (pi - 0.5).abs() >= tau {
        let mut r = TestResult::new(NAME, 0.0, 0.0).with_param("pi", pi);
        r.prerequisite_failed = true;
        return Ok(r);
    }
    let v_obs = 1 + bits.windows(2).filter(|w| w[0] != w[1]).count();
    let spread = pi * (1.0 - pi);
    let numerator = (v_obs as f64 - 2.0 * nf * spread).abs();
    let p = erfc(numerator / (2.0 * libm::sqrt(2.0 * nf) * spread));
    Ok(TestResult::new(NAME, v_obs as f64, p).with_param("pi", pi))
}

struct LongestRunTable {
    block_len: usize,
    // runs at or below this land in the first category
    low: usize,
    probabilities: &'static [f64],
}

const TABLE_8: LongestRunTable = LongestRunTable {
    block_len: 8,
    low: 1,
    probabilities: &[0.21484375, 0.3671875, 0.23046875, 0.1875],
};

const TABLE_128: LongestRunTable = LongestRunTable {
    block_len: 128,
    low: 4,
    probabilities: &[
        0.1174035788,
        0.242955959,
        0.249363483,
        0.17517706,
        0.102701071,
        0.112398847,
    ],
};

const TABLE_10K: LongestRunTable = LongestRunTable {
    block_len: 10_000,
    low: 10,
    probabilities: &[0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727],
};

/// Longest run of ones within blocks, compared with its theoretical
/// distribution. Block length 8, 128 or 10^4 follows the sequence length.
pub fn longest_run(bits: &[bool]) -> Result<TestResult, BatteryError> {
    const NAME: &str = "longest_run";
    let n = require_len(NAME, bits, Strictness::Strict, 128, 128)?;
    let table = match n {
        ..6272 => &TABLE_8,
        6272..750_000 => &TABLE_128,
        _ => &TABLE_10K,
    };
    let k = table.probabilities.len() - 1;
    let mut counts = [0usize; 7];
    let blocks = n / table.block_len;
    for block in bits.chunks_exact(table.block_len) {
        let (_, longest) = block.iter().fold((0usize, 0usize), |(run, best), &b| {
            let run = if b { run + 1 } else { 0 };
            (run, best.max(run))
        });
        let category = longest.saturating_sub(table.low).min(k);
        counts[category] += 1;
    }
    let chi_sq: f64 = table
        .probabilities
        .iter()
        .zip(&counts)
        .map(|(&pi, &v)| {
            let expected = blocks as f64 * pi;
            let d = v as f64 - expected;
            d * d / expected
        })
        .sum();
    let p = igamc(k as f64 / 2.0, chi_sq / 2.0);
    Ok(TestResult::new(NAME, chi_sq, p).with_param("block_len", table.block_len as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::battery::fixtures::*;
    use alloc::vec;

    const LR128: &str = "11001100000101010110110001001100111000000000001001\
                         00110101010001000100111101011010000000110101111100\
                         1100111001101101100010110010";

    #[test]
    fn runs_reference_values() {
        let r = runs_test(&bits("1001101011"), Strictness::Relaxed).unwrap();
        assert_eq!(r.statistic, 7.0);
        assert_close(r.p_value, 0.147232255363666, 1e-12);
        let r = runs_test(&bits(EPS100), Strictness::Strict).unwrap();
        assert_close(r.p_value, 0.500797917887090, 1e-12);
    }

    #[test]
    fn alternation_has_too_many_runs() {
        let r = runs_test(&alternating(10_000), Strictness::Strict).unwrap();
        assert!(!r.prerequisite_failed);
        assert_eq!(r.statistic, 10_000.0);
        assert!(r.p_value < 1e-20);
    }

    #[test]
    fn two_runs_fail() {
        let seq: vec::Vec<bool> = (0..100).map(|i| i >= 50).collect();
        let r = runs_test(&seq, Strictness::Strict).unwrap();
        assert!(r.prerequisite_failed || r.p_value < 1e-6);
        assert!(r.p_value < 1e-6);
    }

    #[test]
    fn biased_input_trips_the_gate() {
        let r = runs_test(&[true; 200], Strictness::Strict).unwrap();
        assert!(r.prerequisite_failed);
        assert_eq!(r.p_value, 0.0);
    }

    #[test]
    fn longest_run_reference_value() {
        let r = longest_run(&bits(LR128)).unwrap();
        assert_eq!(r.param("block_len"), Some(8.0));
        assert_close(r.statistic, 4.882457463200341, 1e-12);
        assert_close(r.p_value, 0.180609318239712, 1e-12);
    }

    #[test]
    fn longest_run_all_ones() {
        let r = longest_run(&vec![true; 10_000]).unwrap();
        assert_eq!(r.param("block_len"), Some(128.0));
        assert!(r.p_value < 1e-20);
    }

    #[test]
    fn longest_run_needs_128_bits() {
        assert!(matches!(
            longest_run(&[true; 127]),
            Err(BatteryError::TooShort { min: 128, .. })
        ));
    }

    #[test]
    fn longest_run_on_noise_is_unremarkable() {
        for seed in 1..6 {
            let p = longest_run(&lcg_bits(100_000, seed)).unwrap().p_value;
            assert!(p > 1e-4, "seed {seed}: {p}");
        }
        let r = longest_run(&lcg_bits(750_000, 9)).unwrap();
        assert_eq!(r.param("block_len"), Some(10_000.0));
    }
}
