//! Correlation, spectrum, orbit periodicity and the phase-space metric.

mod correlation;
mod cycle;
mod metric;
mod spectrum;

use thiserror::Error;

use crate::generator::GeneratorError;

pub use correlation::{autocorrelation, cross_correlation, CorrelationSeries};
pub use cycle::{
    detect_cycle, detect_cycle_from, find_cycle, ideal_period, CycleReport, DEFAULT_CYCLE_BUDGET,
};
pub use metric::{phase_distance, strategy_prefix, PhaseDistance, DEFAULT_PREFIX_K};
pub use spectrum::{flatness_threshold, power_spectrum, PowerSpectrum};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("maximum lag must be at least 1")]
    ZeroLag,
    #[error("sequence of {len} values is too short for lag {max_lag}")]
    LagTooLarge { len: usize, max_lag: usize },
    #[error("sequences differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("power spectrum needs at least {min} bits, got {len}")]
    TooShort { len: usize, min: usize },
    #[error("no period found within {budget} block steps")]
    BudgetExceeded { budget: u64 },
    #[error("re-simulation disagrees with the detected cycle at offset {offset}")]
    VerificationFailed { offset: u64 },
    #[error("systems differ in size ({0} vs {1} cells)")]
    CellCountMismatch(usize, usize),
    #[error("strategy value {value} outside 1..={n_cells}")]
    StrategyOutOfRange { value: usize, n_cells: usize },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
}
