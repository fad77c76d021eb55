//! The logistic driver and the two quantities derived from it: the strategy
//! (which cell to iterate) and the return gap (how many iterations separate
//! two emitted states).

use super::config::GapSet;
use super::driver::Driver;
use super::GeneratorError;

/// One step of the fully chaotic logistic map, `4y(1 - y)`, in binary64.
#[inline]
pub fn logistic_step(y: f64) -> f64 {
    4.0 * y * (1.0 - y)
}

/// `(floor(10^7 * y) mod n_cells) + 1`, with the floor taken on the rounded
/// binary64 product.
#[inline]
pub fn strategy_from_y(y: f64, n_cells: usize) -> usize {
    debug_assert!((0.0..=1.0).contains(&y));
    // truncation of a non-negative product is its floor
    let scaled = (1.0e7 * y) as u64;
    (scaled % n_cells as u64) as usize + 1
}

/// Return gap for driver value `y`: the set is split into `|M|` equal-width
/// intervals of `[0, 1)` and `y = 1` falls into the last one.
///
/// For `M = {a, b}` this is `a` below 0.5 and `b` from 0.5 up.
#[inline]
pub fn gap_from_y(y: f64, gaps: &GapSet) -> u32 {
    let values = gaps.as_slice();
    let index = ((y * values.len() as f64) as usize).min(values.len() - 1);
    values[index]
}

/// Logistic-map driver shared by the gap and strategy draws.
///
/// Every draw consumes one sample of the orbit `y0, y1, ...`: a block takes
/// one sample for its gap and then one per cell update.
#[derive(Clone, Debug)]
pub struct LogisticDriver {
    y: f64,
    gaps: GapSet,
}

impl LogisticDriver {
    pub fn new(y0: f64, gaps: GapSet) -> Self {
        Self { y: y0, gaps }
    }

    /// The next sample to be consumed.
    pub fn current(&self) -> f64 {
        self.y
    }

    pub fn gaps(&self) -> &GapSet {
        &self.gaps
    }

    fn take(&mut self) -> Result<f64, GeneratorError> {
        let y = self.y;
        let next = logistic_step(y);
        if next == y {
            return Err(GeneratorError::DeadSeed { y });
        }
        self.y = next;
        Ok(y)
    }
}

// Equality on the exact bit pattern so that cycle detection sees the full
// digital state.
impl PartialEq for LogisticDriver {
    fn eq(&self, other: &Self) -> bool {
        self.y.to_bits() == other.y.to_bits() && self.gaps == other.gaps
    }
}

impl Eq for LogisticDriver {}

impl Driver for LogisticDriver {
    fn next_gap(&mut self) -> Result<u32, GeneratorError> {
        let y = self.take()?;
        Ok(gap_from_y(y, &self.gaps))
    }

    fn next_strategy(&mut self, n_cells: usize) -> Result<usize, GeneratorError> {
        let y = self.take()?;
        Ok(strategy_from_y(y, n_cells))
    }
}
