use super::{require_len, BatteryError, Strictness, TestResult};
use crate::special::normal_cdf;

/// Cumulative sums test in both directions: `(forward, backward)`.
pub fn cumulative_sums(
    bits: &[bool],
    strictness: Strictness,
) -> Result<(TestResult, TestResult), BatteryError> {
    let n = require_len("cumulative_sums", bits, strictness, 100, 1)?;
    let forward = max_excursion(bits.iter());
    let backward = max_excursion(bits.iter().rev());
    Ok((
        TestResult::new(
            "cumulative_sums.forward",
            forward as f64,
            cusum_p(n, forward),
        ),
        TestResult::new(
            "cumulative_sums.backward",
            backward as f64,
            cusum_p(n, backward),
        ),
    ))
}

fn max_excursion<'a>(bits: impl Iterator<Item = &'a bool>) -> u64 {
    bits.scan(0i64, |s, &b| {
        *s += if b { 1 } else { -1 };
        Some(s.unsigned_abs())
    })
    .max()
    .unwrap_or(0)
}

fn cusum_p(n: usize, z: u64) -> f64 {
    let nf = n as f64;
    let z = z as f64;
    let sqrt_n = libm::sqrt(nf);
    // summation bounds truncate toward zero
    let lo1 = ((-nf / z + 1.0) / 4.0) as i64;
    let hi = ((nf / z - 1.0) / 4.0) as i64;
    let lo2 = ((-nf / z - 3.0) / 4.0) as i64;
    let term = |k: i64, a: f64, b: f64| {
        normal_cdf((4.0 * k as f64 + a) * z / sqrt_n)
            - normal_cdf((4.0 * k as f64 + b) * z / sqrt_n)
    };
    let sum1: f64 = (lo1..=hi).map(|k| term(k, 1.0, -1.0)).sum();
    let sum2: f64 = (lo2..=hi).map(|k| term(k, 3.0, 1.0)).sum();
    1.0 - sum1 + sum2
}
