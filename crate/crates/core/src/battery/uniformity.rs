use super::BatteryError;
use crate::special::igamc;

/// A collection of P-values is taken as uniform when `P_T` reaches this.
pub const UNIFORMITY_THRESHOLD: f64 = 0.0001;

/// Sample size below which `P_T` is flagged as unreliable.
pub const DEFAULT_MIN_SEQUENCES: usize = 55;

/// Chi-square uniformity check of a set of P-values over ten equal bins.
#[derive(Clone, Debug, PartialEq)]
pub struct Uniformity {
    pub bins: [usize; 10],
    pub chi_square: f64,
    pub p_t: f64,
    /// Fewer P-values than the configured minimum.
    pub small_sample: bool,
}

impl Uniformity {
    pub fn passed(&self) -> bool {
        self.p_t >= UNIFORMITY_THRESHOLD
    }
}

/// [`p_uniformity_with_min`] with the default minimum of 55 values.
pub fn p_uniformity(p_values: &[f64]) -> Result<Uniformity, BatteryError> {
    p_uniformity_with_min(p_values, DEFAULT_MIN_SEQUENCES)
}

/// Bins the P-values into `[0, 0.1), ..., [0.9, 1]` and returns
/// `P_T = Q(9/2, chi^2/2)`.
pub fn p_uniformity_with_min(
    p_values: &[f64],
    min_values: usize,
) -> Result<Uniformity, BatteryError> {
    if p_values.is_empty() {
        return Err(BatteryError::NoPValues);
    }
    let mut bins = [0usize; 10];
    for &p in p_values {
        let bin = ((p.clamp(0.0, 1.0) * 10.0) as usize).min(9);
        bins[bin] += 1;
    }
    let expected = p_values.len() as f64 / 10.0;
    let chi_square = bins
        .iter()
        .map(|&f| {
            let d = f as f64 - expected;
            d * d / expected
        })
        .sum::<f64>();
    Ok(Uniformity {
        bins,
        chi_square,
        p_t: igamc(4.5, chi_square / 2.0),
        small_sample: p_values.len() < min_values,
    })
}
