use super::AnalysisError;
use crate::generator::{CellState, ChaoticState, Driver, GeneratorConfig, LogisticDriver};

/// Default number of block steps searched before giving up.
pub const DEFAULT_CYCLE_BUDGET: u64 = 100_000_000;

/// Shape of an eventually periodic orbit: `transient_length` states before
/// the cycle, then `cycle_period` states repeating.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleReport {
    pub transient_length: u64,
    pub cycle_period: u64,
    pub orbit_length: u64,
}

/// Period of a driven system whose gap and strategy sequences repeat with
/// periods `n_m` and `n_s`: each cell returns to itself after two negations.
pub fn ideal_period(n_m: u64, n_s: u64) -> u64 {
    2 * n_m * n_s
}

/// Brent's cycle detection over the orbit `start, step(start), ...`, followed
/// by a re-simulation check of `3 * period` steps past the transient.
///
/// `step` advances a state in place. At most `budget` steps are spent looking
/// for the period.
pub fn find_cycle<T, F>(start: &T, mut step: F, budget: u64) -> Result<CycleReport, AnalysisError>
where
    T: Clone + PartialEq,
    F: FnMut(&mut T) -> Result<(), AnalysisError>,
{
    // period: the hare races ahead, the tortoise teleports at powers of two
    let mut power = 1u64;
    let mut period = 1u64;
    let mut spent = 1u64;
    let mut tortoise = start.clone();
    let mut hare = start.clone();
    step(&mut hare)?;
    while tortoise != hare {
        if spent >= budget {
            return Err(AnalysisError::BudgetExceeded { budget });
        }
        if power == period {
            tortoise = hare.clone();
            power *= 2;
            period = 0;
        }
        step(&mut hare)?;
        period += 1;
        spent += 1;
    }

    // transient: walk two pointers `period` apart until they meet
    let mut tortoise = start.clone();
    let mut hare = start.clone();
    for _ in 0..period {
        step(&mut hare)?;
    }
    let mut transient = 0u64;
    while tortoise != hare {
        step(&mut tortoise)?;
        step(&mut hare)?;
        transient += 1;
    }

    for offset in 0..3 * period {
        if tortoise != hare {
            return Err(AnalysisError::VerificationFailed { offset });
        }
        step(&mut tortoise)?;
        step(&mut hare)?;
    }

    Ok(CycleReport {
        transient_length: transient,
        cycle_period: period,
        orbit_length: transient + period,
    })
}

/// Cycle structure of the block-level orbit of a driven system.
///
/// The orbit is the sequence of full states (cells and driver) seen at block
/// boundaries, starting from the seed state; the emitted blocks are the
/// cell parts of these states.
pub fn detect_cycle_from<D>(
    x0: CellState,
    driver: D,
    budget: u64,
) -> Result<CycleReport, AnalysisError>
where
    D: Driver + Clone + PartialEq,
{
    let start = ChaoticState::new(x0, driver);
    find_cycle(
        &start,
        |state: &mut ChaoticState<D>| {
            state.advance_block()?;
            Ok(())
        },
        budget,
    )
}

/// Cycle structure of a logistic-driven generator. States compare the
/// driver value bit for bit.
pub fn detect_cycle(config: &GeneratorConfig, budget: u64) -> Result<CycleReport, AnalysisError> {
    let (x0, y0) = config.initial_values();
    detect_cycle_from(x0, LogisticDriver::new(y0, config.gaps().clone()), budget)
}
