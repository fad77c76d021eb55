use core::f64::consts::FRAC_1_SQRT_2;

use super::{require_len, BatteryError, Strictness, TestResult};
use crate::bits::to_signs;
use crate::fft::fft_real;
use crate::special::erfc;

/// Discrete Fourier transform (spectral) test: the share of the first `n/2`
/// spectral moduli below the 95 % peak threshold `sqrt(n ln 20)`.
pub fn spectral_dft(bits: &[bool], strictness: Strictness) -> Result<TestResult, BatteryError> {
    const NAME: &str = "spectral_dft";
    let n = require_len(NAME, bits, strictness, 1000, 2)?;
    let nf = n as f64;
    let spectrum = fft_real(&to_signs(bits));
    let threshold = libm::sqrt(libm::log(1.0 / 0.05) * nf);
    let expected = 0.95 * nf / 2.0;
    let below = spectrum[..n / 2]
        .iter()
        .filter(|x| x.norm() < threshold)
        .count() as f64;
    let d = (below - expected) / libm::sqrt(nf * 0.95 * 0.05 / 4.0);
    let p = erfc(d.abs() * FRAC_1_SQRT_2);
    Ok(TestResult::new(NAME, d, p).with_param("peaks_below", below))
}
