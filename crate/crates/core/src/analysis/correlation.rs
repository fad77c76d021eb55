use alloc::vec::Vec;

use super::AnalysisError;
use crate::bits::to_signs;

/// Correlation coefficients over a contiguous range of lags.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationSeries {
    /// Lag of `values[0]`.
    pub first_lag: i64,
    pub values: Vec<f64>,
    /// A constant input made the normalization undefined; the series then
    /// holds the conventional values (1 at lag 0 of an autocorrelation, 0
    /// elsewhere).
    pub degenerate: bool,
}

impl CorrelationSeries {
    pub fn lags(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.values.len() as i64).map(move |i| self.first_lag + i)
    }

    pub fn at(&self, lag: i64) -> Option<f64> {
        let index = usize::try_from(lag - self.first_lag).ok()?;
        self.values.get(index).copied()
    }

    /// `(lag, value)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.lags().zip(self.values.iter().copied())
    }
}

fn centered(bits: &[bool]) -> (Vec<f64>, f64) {
    let mut a = to_signs(bits);
    let mean = a.iter().sum::<f64>() / a.len() as f64;
    for v in &mut a {
        *v -= mean;
    }
    let energy = a.iter().map(|v| v * v).sum();
    (a, energy)
}

fn lagged_sum(a: &[f64], b: &[f64], lag: usize) -> f64 {
    a.iter().zip(&b[lag..]).map(|(x, y)| x * y).sum()
}

fn check_lag(len: usize, max_lag: usize) -> Result<(), AnalysisError> {
    if max_lag == 0 {
        return Err(AnalysisError::ZeroLag);
    }
    if len <= max_lag {
        return Err(AnalysisError::LagTooLarge { len, max_lag });
    }
    Ok(())
}

/// Autocorrelation of the ±1 image of `bits` for lags `0..=max_lag`.
///
/// The estimator is mean-centered and biased: every lag divides by the
/// energy of the full sequence, so `r(0) = 1` and `|r(tau)|` shrinks with the
/// overlap.
pub fn autocorrelation(bits: &[bool], max_lag: usize) -> Result<CorrelationSeries, AnalysisError> {
    check_lag(bits.len(), max_lag)?;
    let (a, energy) = centered(bits);
    if energy == 0.0 {
        let mut values = alloc::vec![0.0; max_lag + 1];
        values[0] = 1.0;
        return Ok(CorrelationSeries {
            first_lag: 0,
            values,
            degenerate: true,
        });
    }
    let values = (0..=max_lag)
        .map(|lag| {
            if lag == 0 {
                1.0
            } else {
                lagged_sum(&a, &a, lag) / energy
            }
        })
        .collect();
    Ok(CorrelationSeries {
        first_lag: 0,
        values,
        degenerate: false,
    })
}

/// Cross-correlation of two equally long sequences for lags
/// `-max_lag..=max_lag`; lag `tau` pairs `a[i]` with `b[i + tau]`.
///
/// Same estimator as [`autocorrelation`], normalized by the geometric mean of
/// the two energies.
pub fn cross_correlation(
    a: &[bool],
    b: &[bool],
    max_lag: usize,
) -> Result<CorrelationSeries, AnalysisError> {
    if a.len() != b.len() {
        return Err(AnalysisError::LengthMismatch(a.len(), b.len()));
    }
    check_lag(a.len(), max_lag)?;
    let (ca, ea) = centered(a);
    let (cb, eb) = centered(b);
    let first_lag = -(max_lag as i64);
    if ea == 0.0 || eb == 0.0 {
        return Ok(CorrelationSeries {
            first_lag,
            values: alloc::vec![0.0; 2 * max_lag + 1],
            degenerate: true,
        });
    }
    let norm = libm::sqrt(ea * eb);
    let values = (first_lag..=max_lag as i64)
        .map(|lag| {
            let sum = if lag >= 0 {
                lagged_sum(&ca, &cb, lag as usize)
            } else {
                lagged_sum(&cb, &ca, lag.unsigned_abs() as usize)
            };
            sum / norm
        })
        .collect();
    Ok(CorrelationSeries {
        first_lag,
        values,
        degenerate: false,
    })
}
