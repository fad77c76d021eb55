use alloc::vec::Vec;

use super::AnalysisError;
use crate::bits::to_signs;
use crate::fft::fft_real;

const MIN_BITS: usize = 64;

/// Periodogram of the ±1 image of a bit sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSpectrum {
    /// `|X_k|^2 / n` for `k = 0..=n/2`. White noise has mean power 1.
    pub power: Vec<f64>,
    /// `sum |X_k|^2 / n` over all `n` bins; equals `n` by Parseval.
    pub total_energy: f64,
    /// Largest non-DC bin over the mean non-DC bin; infinite when there is
    /// no energy outside DC.
    pub flatness: f64,
}

impl PowerSpectrum {
    /// `(frequency_index, power)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.power.iter().copied().enumerate()
    }
}

/// Flatness bound for `n` white-noise bits: `ln(n/2) + ln(1000)`.
///
/// Non-DC periodogram bins of white noise are close to unit exponentials, so
/// the largest of `n/2` of them exceeds this with probability about 0.1 %.
pub fn flatness_threshold(n: usize) -> f64 {
    libm::log(n as f64 / 2.0) + libm::log(1000.0)
}

pub fn power_spectrum(bits: &[bool]) -> Result<PowerSpectrum, AnalysisError> {
    let n = bits.len();
    if n < MIN_BITS {
        return Err(AnalysisError::TooShort {
            len: n,
            min: MIN_BITS,
        });
    }
    let spectrum = fft_real(&to_signs(bits));
    let nf = n as f64;
    let total_energy = spectrum.iter().map(|x| x.norm_sqr()).sum::<f64>() / nf;
    let power: Vec<f64> = spectrum[..=n / 2]
        .iter()
        .map(|x| x.norm_sqr() / nf)
        .collect();
    let non_dc = &power[1..];
    let mean = non_dc.iter().sum::<f64>() / non_dc.len() as f64;
    let peak = non_dc.iter().copied().fold(0.0, f64::max);
    let flatness = if mean > 0.0 {
        peak / mean
    } else {
        f64::INFINITY
    };
    Ok(PowerSpectrum {
        power,
        total_energy,
        flatness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::battery::fixtures::{alternating, lcg_bits};

    #[test]
    fn constant_input_is_all_dc() {
        let s = power_spectrum(&[true; 128]).unwrap();
        assert_eq!(s.power.len(), 65);
        assert!((s.power[0] - 128.0).abs() < 1e-9);
        assert!(s.power[1..].iter().all(|&p| p < 1e-12));
        assert_eq!(s.flatness, f64::INFINITY);
    }

    #[test]
    fn alternation_peaks_at_nyquist() {
        let s = power_spectrum(&alternating(1000)).unwrap();
        let (k, _) = s.iter().max_by(|a, b| a.1.total_cmp(&b.1)).unwrap();
        assert_eq!(k, 500);
        assert!((s.power[500] - 1000.0).abs() < 1e-6);
    }

    #[test]
    fn parseval() {
        for n in [64, 100, 1000, 4096, 100_003] {
            let s = power_spectrum(&lcg_bits(n, n as u64)).unwrap();
            assert!((s.total_energy / n as f64 - 1.0).abs() < 1e-9, "n = {n}");
        }
    }

    #[test]
    fn noise_is_flat() {
        let n = 100_000;
        for seed in 1..4 {
            let s = power_spectrum(&lcg_bits(n, seed)).unwrap();
            assert!(
                s.flatness < flatness_threshold(n),
                "seed {seed}: {}",
                s.flatness
            );
        }
    }

    #[test]
    fn short_input_rejected() {
        assert_eq!(
            power_spectrum(&[true; 63]),
            Err(AnalysisError::TooShort { len: 63, min: 64 })
        );
    }
}
