use alloc::vec::Vec;

use super::GeneratorError;

/// Source of return gaps and strategy values.
pub trait Driver {
    /// Gap before the next emitted state.
    fn next_gap(&mut self) -> Result<u32, GeneratorError>;
    /// Cell (1-based) to iterate next.
    fn next_strategy(&mut self, n_cells: usize) -> Result<usize, GeneratorError>;
}

/// Replays explicit strategy and gap sequences instead of the logistic map.
///
/// With `cyclic` set both sequences repeat forever, which is how periodic
/// drivers are modelled; otherwise running past the end is an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranscriptDriver {
    strategy: Vec<usize>,
    gaps: Vec<u32>,
    strategy_pos: usize,
    gap_pos: usize,
    cyclic: bool,
}

impl TranscriptDriver {
    /// Strategy values must be at least 1 and gaps at least 1. A cyclic
    /// transcript needs both sequences nonempty.
    pub fn new(strategy: Vec<usize>, gaps: Vec<u32>, cyclic: bool) -> Result<Self, GeneratorError> {
        if strategy.contains(&0) || gaps.contains(&0) {
            return Err(GeneratorError::InvalidTranscript);
        }
        if cyclic && (strategy.is_empty() || gaps.is_empty()) {
            return Err(GeneratorError::InvalidTranscript);
        }
        Ok(Self {
            strategy,
            gaps,
            strategy_pos: 0,
            gap_pos: 0,
            cyclic,
        })
    }

    pub fn strategy(&self) -> &[usize] {
        &self.strategy
    }

    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    fn advance<T: Copy>(values: &[T], pos: &mut usize, cyclic: bool) -> Option<T> {
        let value = *values.get(*pos)?;
        *pos += 1;
        if cyclic && *pos == values.len() {
            *pos = 0;
        }
        Some(value)
    }
}

impl Driver for TranscriptDriver {
    fn next_gap(&mut self) -> Result<u32, GeneratorError> {
        Self::advance(&self.gaps, &mut self.gap_pos, self.cyclic)
            .ok_or(GeneratorError::TranscriptExhausted)
    }

    fn next_strategy(&mut self, _n_cells: usize) -> Result<usize, GeneratorError> {
        Self::advance(&self.strategy, &mut self.strategy_pos, self.cyclic)
            .ok_or(GeneratorError::TranscriptExhausted)
    }
}
