use alloc::format;
use alloc::vec::Vec;

use thiserror::Error;

use super::cells::{CellState, MAX_CELLS};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("system size {0} is outside 2..={MAX_CELLS}")]
    CellCount(usize),
    #[error("return-gap set is empty")]
    EmptyGapSet,
    #[error("return gaps must be at least 1")]
    ZeroGap,
    #[error("return gap {0} listed twice")]
    DuplicateGap(u32),
    #[error("initial state has {found} cells, expected {expected}")]
    SeedLength { expected: usize, found: usize },
    #[error("y0 = {0} is not strictly inside (0, 1)")]
    SeedOutOfRange(f64),
    #[error("y0 = {0} collapses onto a fixed point of the logistic map; pick another seed")]
    DegenerateSeed(f64),
}

/// The finite set `M` of return gaps, kept sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GapSet(Vec<u32>);

impl GapSet {
    /// Sorts `values`; rejects an empty set, a zero gap, or a repeated gap.
    pub fn new(mut values: Vec<u32>) -> Result<Self, ConfigError> {
        if values.is_empty() {
            return Err(ConfigError::EmptyGapSet);
        }
        values.sort_unstable();
        if values[0] == 0 {
            return Err(ConfigError::ZeroGap);
        }
        if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
            return Err(ConfigError::DuplicateGap(w[0]));
        }
        Ok(Self(values))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, gap: u32) -> bool {
        self.0.binary_search(&gap).is_ok()
    }
}

/// Where the initial state `x0` and driver value `y0` come from.
#[derive(Clone, Debug, PartialEq)]
pub enum SeedSpec {
    Explicit {
        x0: CellState,
        y0: f64,
    },
    /// Decimal digits `t` of a time stamp; see [`seed_from_time`].
    TimeDerived {
        t: u64,
    },
}

impl SeedSpec {
    /// Resolves to `(x0, y0)` for a system of `n_cells` cells.
    pub fn resolve(&self, n_cells: usize) -> Result<(CellState, f64), ConfigError> {
        match *self {
            SeedSpec::Explicit { x0, y0 } => {
                if x0.len() != n_cells {
                    return Err(ConfigError::SeedLength {
                        expected: n_cells,
                        found: x0.len(),
                    });
                }
                check_y0(y0)?;
                Ok((x0, y0))
            }
            SeedSpec::TimeDerived { t } => seed_from_time(t, n_cells),
        }
    }
}

/// Seeds from a decimal integer `t`: `y0` is `0.t` (the digits of `t` behind
/// the decimal point) and `x0` is `t mod 2^N` written big-endian, its most
/// significant bit in cell 1.
pub fn seed_from_time(t: u64, n_cells: usize) -> Result<(CellState, f64), ConfigError> {
    if !(1..=MAX_CELLS).contains(&n_cells) {
        return Err(ConfigError::CellCount(n_cells));
    }
    let residue = if n_cells == 64 {
        t
    } else {
        t % (1u64 << n_cells)
    };
    let x0 = CellState::from_big_endian(residue, n_cells);
    // parsing the decimal literal gives the correctly rounded binary64 value
    let y0: f64 = format!("0.{t}")
        .parse()
        .expect("decimal literal always parses");
    check_y0(y0)?;
    Ok((x0, y0))
}

fn check_y0(y0: f64) -> Result<(), ConfigError> {
    if !(y0 > 0.0 && y0 < 1.0) {
        return Err(ConfigError::SeedOutOfRange(y0));
    }
    if y0 == 0.25 || y0 == 0.5 || y0 == 0.75 {
        return Err(ConfigError::DegenerateSeed(y0));
    }
    Ok(())
}

/// Parameters of one generator instance.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    n_cells: usize,
    gaps: GapSet,
    seed: SeedSpec,
    emit_initial: bool,
}

impl GeneratorConfig {
    /// Validates the system size and the seed. `emit_initial` defaults to true.
    pub fn new(n_cells: usize, gaps: GapSet, seed: SeedSpec) -> Result<Self, ConfigError> {
        if !(2..=MAX_CELLS).contains(&n_cells) {
            return Err(ConfigError::CellCount(n_cells));
        }
        seed.resolve(n_cells)?;
        Ok(Self {
            n_cells,
            gaps,
            seed,
            emit_initial: true,
        })
    }

    /// Whether the first emitted block is the unmodified initial state.
    pub fn with_emit_initial(mut self, emit_initial: bool) -> Self {
        self.emit_initial = emit_initial;
        self
    }

    /// Same parameters, different seed.
    pub fn with_seed(&self, seed: SeedSpec) -> Result<Self, ConfigError> {
        seed.resolve(self.n_cells)?;
        Ok(Self {
            seed,
            ..self.clone()
        })
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn gaps(&self) -> &GapSet {
        &self.gaps
    }

    pub fn seed(&self) -> &SeedSpec {
        &self.seed
    }

    pub fn emit_initial(&self) -> bool {
        self.emit_initial
    }

    /// The validated `(x0, y0)` pair.
    pub fn initial_values(&self) -> (CellState, f64) {
        self.seed
            .resolve(self.n_cells)
            .expect("seed validated at construction")
    }
}
