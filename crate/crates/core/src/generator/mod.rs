//! The chaotic-iterations bit generator.
//!
//! A block is produced by drawing a return gap `m` from the driver and then
//! performing `m` chaotic iterations, each one flipping the cell chosen by the
//! next strategy value. With the logistic driver every draw consumes exactly
//! one sample of the logistic orbit: one for the gap, then one per iteration,
//! in that order.

mod cells;
mod config;
mod driver;
mod engine;
mod logistic;

use thiserror::Error;

pub use cells::{chaotic_step, CellState, MAX_CELLS};
pub use config::{seed_from_time, ConfigError, GapSet, GeneratorConfig, SeedSpec};
pub use driver::{Driver, TranscriptDriver};
pub use engine::{generate_bits, ChaoticState, Generator};
pub use logistic::{gap_from_y, logistic_step, strategy_from_y, LogisticDriver};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error("logistic driver stuck at fixed point y = {y}; the seed is dead, re-seed")]
    DeadSeed { y: f64 },
    #[error("strategy value {s} outside 1..={n_cells}")]
    StrategyOutOfRange { s: usize, n_cells: usize },
    #[error("forced transcript exhausted")]
    TranscriptExhausted,
    #[error("forced transcript entries must be at least 1, and nonempty when cyclic")]
    InvalidTranscript,
    #[error(transparent)]
    Config(#[from] ConfigError),
}
