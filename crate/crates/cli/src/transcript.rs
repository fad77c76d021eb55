//! Forced-driver transcripts.
//!
//! A transcript file fixes the initial cells and the strategy and gap
//! sequences instead of deriving them from the logistic driver:
//!
//! ```text
//! x0 = 10100
//! s = 2,4,2,2,5,1,1,5,5,3,2,3,3
//! m = 4,5,4
//! repeat = false
//! ```
//!
//! With `repeat = true` both sequences are replayed cyclically. `#` starts a
//! comment line.

use chaotic_prng::generator::TranscriptDriver;
use chaotic_prng::{CellState, GapSet};
use thiserror::Error;

use crate::config_file::parse_cells;

#[derive(Debug, Error, PartialEq)]
pub enum TranscriptError {
    #[error("line {line}: {reason}")]
    Line { line: usize, reason: String },
    #[error("missing key `{0}`")]
    Missing(&'static str),
    #[error("strategy value {value} outside 1..={n_cells}")]
    Strategy { value: usize, n_cells: usize },
    #[error("gap {0} is not in the configured set")]
    Gap(u32),
    #[error("transcript has {found} cells but the scheme has {expected}")]
    CellCount { expected: usize, found: usize },
    #[error("a repeating transcript needs nonempty s and m")]
    EmptyCycle,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Transcript {
    pub x0: CellState,
    pub strategy: Vec<usize>,
    pub gaps: Vec<u32>,
    pub repeat: bool,
}

impl Transcript {
    pub fn parse(text: &str) -> Result<Self, TranscriptError> {
        let mut x0 = None;
        let mut strategy = None;
        let mut gaps = None;
        let mut repeat = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let err = |reason: String| TranscriptError::Line { line, reason };
            let (key, value) = trimmed
                .split_once('=')
                .ok_or_else(|| err("expected `key = value`".to_owned()))?;
            let value = value.trim();
            match key.trim() {
                "x0" => x0 = Some(parse_cells(value).map_err(err)?),
                "s" => strategy = Some(parse_list(value).map_err(err)?),
                "m" => gaps = Some(parse_list(value).map_err(err)?),
                "repeat" => repeat = value.parse().map_err(|e| err(format!("{e}")))?,
                other => return Err(err(format!("unknown key `{other}`"))),
            }
        }
        let t = Self {
            x0: x0.ok_or(TranscriptError::Missing("x0"))?,
            strategy: strategy.ok_or(TranscriptError::Missing("s"))?,
            gaps: gaps.ok_or(TranscriptError::Missing("m"))?,
            repeat,
        };
        let n_cells = t.x0.len();
        if let Some(&value) = t.strategy.iter().find(|&&s| s == 0 || s > n_cells) {
            return Err(TranscriptError::Strategy { value, n_cells });
        }
        if let Some(&g) = t.gaps.iter().find(|&&g| g == 0) {
            return Err(TranscriptError::Gap(g));
        }
        if t.repeat && (t.strategy.is_empty() || t.gaps.is_empty()) {
            return Err(TranscriptError::EmptyCycle);
        }
        Ok(t)
    }

    /// Checks the transcript against a configured system size and gap set.
    pub fn check_against(&self, n_cells: usize, gaps: &GapSet) -> Result<(), TranscriptError> {
        if self.x0.len() != n_cells {
            return Err(TranscriptError::CellCount {
                expected: n_cells,
                found: self.x0.len(),
            });
        }
        match self.gaps.iter().find(|&&g| !gaps.contains(g)) {
            Some(&g) => Err(TranscriptError::Gap(g)),
            None => Ok(()),
        }
    }

    pub fn driver(&self) -> TranscriptDriver {
        TranscriptDriver::new(self.strategy.clone(), self.gaps.clone(), self.repeat)
            .expect("validated by parse")
    }
}

fn parse_list<T: std::str::FromStr>(text: &str) -> Result<Vec<T>, String>
where
    T::Err: std::fmt::Display,
{
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|v| v.trim().parse().map_err(|e| format!("`{}`: {e}", v.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED_EXAMPLE: &str = "x0 = 10100\ns = 2,4,2,2,5,1,1,5,5,3,2,3,3\nm = 4,5,4\n";

    #[test]
    fn parses_worked_example() {
        let t = Transcript::parse(WORKED_EXAMPLE).unwrap();
        assert_eq!(t.x0.to_string(), "10100");
        assert_eq!(t.strategy.len(), 13);
        assert_eq!(t.gaps, [4, 5, 4]);
        assert!(!t.repeat);
        assert!(t
            .check_against(5, &GapSet::new(vec![4, 5]).unwrap())
            .is_ok());
        assert_eq!(
            t.check_against(5, &GapSet::new(vec![14, 15]).unwrap()),
            Err(TranscriptError::Gap(4))
        );
        assert_eq!(
            t.check_against(8, &GapSet::new(vec![4, 5]).unwrap()),
            Err(TranscriptError::CellCount {
                expected: 8,
                found: 5
            })
        );
    }

    #[test]
    fn rejects_bad_transcripts() {
        assert_eq!(
            Transcript::parse("x0 = 0000\ns = 1,5\nm = 1"),
            Err(TranscriptError::Strategy {
                value: 5,
                n_cells: 4
            })
        );
        assert_eq!(
            Transcript::parse("s = 1\nm = 1"),
            Err(TranscriptError::Missing("x0"))
        );
        assert_eq!(
            Transcript::parse("x0 = 00\ns =\nm = 1\nrepeat = true"),
            Err(TranscriptError::EmptyCycle)
        );
        assert!(matches!(
            Transcript::parse("x0 = 00\nq = 1"),
            Err(TranscriptError::Line { line: 2, .. })
        ));
    }
}
