use alloc::vec::Vec;

use super::cells::{chaotic_step, CellState};
use super::config::GeneratorConfig;
use super::driver::Driver;
use super::logistic::LogisticDriver;
use super::GeneratorError;

/// Everything that determines the future of the iteration: the cells and
/// the driver. Two equal values produce identical continuations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChaoticState<D> {
    pub cells: CellState,
    pub driver: D,
}

impl<D: Driver> ChaoticState<D> {
    pub fn new(cells: CellState, driver: D) -> Self {
        Self { cells, driver }
    }

    /// Draws a gap `m` and performs `m` chaotic iterations. Returns `m`.
    pub fn advance_block(&mut self) -> Result<u32, GeneratorError> {
        let gap = self.driver.next_gap()?;
        let n_cells = self.cells.len();
        for _ in 0..gap {
            let s = self.driver.next_strategy(n_cells)?;
            if !(1..=n_cells).contains(&s) {
                return Err(GeneratorError::StrategyOutOfRange { s, n_cells });
            }
            self.cells = chaotic_step(self.cells, s);
        }
        Ok(gap)
    }
}

/// A running generator: the chaotic state plus emission bookkeeping.
#[derive(Clone, Debug)]
pub struct Generator<D = LogisticDriver> {
    state: ChaoticState<D>,
    iter_count: u64,
    blocks_emitted: u64,
    emit_initial: bool,
}

impl Generator<LogisticDriver> {
    pub fn new(config: &GeneratorConfig) -> Self {
        let (x0, y0) = config.initial_values();
        let driver = LogisticDriver::new(y0, config.gaps().clone());
        Self::with_driver(x0, driver, config.emit_initial())
    }

    /// Current logistic value, the next sample the driver will consume.
    pub fn y(&self) -> f64 {
        self.state.driver.current()
    }
}

impl<D: Driver> Generator<D> {
    /// A generator over any driver, including systems of a single cell.
    pub fn with_driver(x0: CellState, driver: D, emit_initial: bool) -> Self {
        Self {
            state: ChaoticState::new(x0, driver),
            iter_count: 0,
            blocks_emitted: 0,
            emit_initial,
        }
    }

    pub fn n_cells(&self) -> usize {
        self.state.cells.len()
    }

    /// Current system state.
    pub fn x(&self) -> CellState {
        self.state.cells
    }

    pub fn state(&self) -> &ChaoticState<D> {
        &self.state
    }

    /// Total cell updates so far, the sum of every gap drawn.
    pub fn iter_count(&self) -> u64 {
        self.iter_count
    }

    pub fn blocks_emitted(&self) -> u64 {
        self.blocks_emitted
    }

    /// Next emitted state. With `emit_initial` the first call returns `x0`
    /// untouched.
    pub fn next_block(&mut self) -> Result<CellState, GeneratorError> {
        if !(self.emit_initial && self.blocks_emitted == 0) {
            let gap = self.state.advance_block()?;
            self.iter_count += u64::from(gap);
        }
        self.blocks_emitted += 1;
        Ok(self.state.cells)
    }

    /// The next `count` bits: whole blocks, cell 1 first, with the unused
    /// tail of the last block dropped.
    pub fn bits(&mut self, count: usize) -> Result<Vec<bool>, GeneratorError> {
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let block = self.next_block()?;
            let take = (count - out.len()).min(block.len());
            out.extend(block.iter().take(take));
        }
        Ok(out)
    }
}

/// First `count` bits produced by a fresh generator for `config`.
pub fn generate_bits(config: &GeneratorConfig, count: usize) -> Result<Vec<bool>, GeneratorError> {
    Generator::new(config).bits(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::{parse_ascii, to_ascii};
    use crate::generator::{GapSet, SeedSpec, TranscriptDriver};
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    fn cells(text: &str) -> CellState {
        CellState::from_bits(&parse_ascii(text).unwrap())
    }

    fn forced(x0: &str, s: Vec<usize>, m: Vec<u32>) -> Generator<TranscriptDriver> {
        let driver = TranscriptDriver::new(s, m, false).unwrap();
        Generator::with_driver(cells(x0), driver, true)
    }

    #[test]
    fn application_example_blocks() {
        let mut g = forced(
            "10100",
            vec![2, 4, 2, 2, 5, 1, 1, 5, 5, 3, 2, 3, 3],
            vec![4, 5, 4],
        );
        assert_eq!(g.next_block().unwrap(), cells("10100"));
        assert_eq!(g.next_block().unwrap(), cells("11110"));
        assert_eq!(g.iter_count(), 4);
        assert_eq!(g.next_block().unwrap(), cells("11111"));
        assert_eq!(g.iter_count(), 9);
        assert_eq!(g.next_block().unwrap(), cells("10011"));
        assert_eq!(g.iter_count(), 13);
        assert_eq!(g.blocks_emitted(), 4);
        assert_eq!(g.next_block(), Err(GeneratorError::TranscriptExhausted));
    }

    #[test]
    fn application_example_output() {
        let mut g = forced(
            "10100",
            vec![2, 4, 2, 2, 5, 1, 1, 5, 5, 3, 2, 3, 3],
            vec![4, 5, 4],
        );
        assert_eq!(to_ascii(&g.bits(20).unwrap()), "10100111101111110011");
    }

    #[test]
    fn strict_mode_skips_the_initial_state() {
        let driver =
            TranscriptDriver::new(vec![2, 4, 2, 2, 5, 1, 1, 5, 5], vec![4, 5], false).unwrap();
        let mut g = Generator::with_driver(cells("10100"), driver, false);
        assert_eq!(to_ascii(&g.bits(10).unwrap()), "1111011111");
    }

    #[test]
    fn logistic_generator_consumes_gap_then_strategies() {
        // y0 = 0.484076 -> gap 4; y1..y4 drive the strategies
        let config = GeneratorConfig::new(
            5,
            GapSet::new(vec![4, 5]).unwrap(),
            SeedSpec::TimeDerived { t: 484_076 },
        )
        .unwrap();
        let mut g = Generator::new(&config);
        assert_eq!(g.next_block().unwrap().to_string(), "01100");
        let mut y = 0.484076;
        let mut x = cells("01100");
        for _ in 0..4 {
            y = crate::generator::logistic_step(y);
            x = chaotic_step(x, crate::generator::strategy_from_y(y, 5));
        }
        assert_eq!(g.next_block().unwrap(), x);
        assert_eq!(g.iter_count(), 4);
        // the next gap comes from y5
        assert_eq!(g.y(), crate::generator::logistic_step(y));
    }

    #[test]
    fn zero_count_is_empty() {
        let config = GeneratorConfig::new(
            5,
            GapSet::new(vec![14, 15]).unwrap(),
            SeedSpec::TimeDerived { t: 484_076 },
        )
        .unwrap();
        assert!(generate_bits(&config, 0).unwrap().is_empty());
    }

    #[test]
    fn truncates_to_whole_block_prefix() {
        let config = GeneratorConfig::new(
            5,
            GapSet::new(vec![14, 15]).unwrap(),
            SeedSpec::TimeDerived { t: 484_076 },
        )
        .unwrap();
        let ten = generate_bits(&config, 10).unwrap();
        assert_eq!(generate_bits(&config, 7).unwrap(), ten[..7]);
    }

    proptest! {
        #[test]
        fn output_is_deterministic_and_indexed_by_block(t in 1u64..10_000_000, count in 0usize..400) {
            let config = match GeneratorConfig::new(
                5,
                GapSet::new(vec![14, 15]).unwrap(),
                SeedSpec::TimeDerived { t },
            ) {
                Ok(c) => c,
                Err(_) => return Ok(()),
            };
            let a = generate_bits(&config, count).unwrap();
            let b = generate_bits(&config, count).unwrap();
            prop_assert_eq!(&a, &b);
            let mut g = Generator::new(&config);
            let blocks: Vec<CellState> = (0..count.div_ceil(5)).map(|_| g.next_block().unwrap()).collect();
            for (k, &bit) in a.iter().enumerate() {
                prop_assert_eq!(bit, blocks[k / 5].get(k % 5 + 1));
            }
        }

        #[test]
        fn iteration_count_is_the_sum_of_gaps(t in 1u64..10_000_000, blocks in 1usize..50) {
            let gaps = GapSet::new(vec![1, 3, 8]).unwrap();
            let config = match GeneratorConfig::new(8, gaps, SeedSpec::TimeDerived { t }) {
                Ok(c) => c.with_emit_initial(false),
                Err(_) => return Ok(()),
            };
            let mut g = Generator::new(&config);
            let mut total = 0u64;
            let mut prev = config.initial_values().0;
            for _ in 0..blocks {
                let y = g.y();
                let gap = crate::generator::gap_from_y(y, config.gaps());
                let block = g.next_block().unwrap();
                total += u64::from(gap);
                prop_assert_eq!(g.iter_count(), total);
                // each step flips one cell, so parity follows the gap
                prop_assert_eq!(block.hamming(&prev) % 2, gap as usize % 2);
                prev = block;
            }
        }
    }
}
