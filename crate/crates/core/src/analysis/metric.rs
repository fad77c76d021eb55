use alloc::vec::Vec;

use super::AnalysisError;
use crate::generator::{CellState, Driver, GeneratorConfig, LogisticDriver};

/// Default strategy prefix length; the neglected tail is below `10^-30`.
pub const DEFAULT_PREFIX_K: usize = 30;

/// Distance between two points `(S, E)` of the phase space
/// `strategies x states`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseDistance {
    /// Number of differing cells, in `0..=N`.
    pub cells: usize,
    /// Strategy part `(9/N) sum_k |S^k - S'^k| / 10^k` over the compared
    /// prefix, in `[0, 1]`.
    pub strategy: f64,
    /// Upper bound on the strategy terms beyond the compared prefix.
    pub tail_bound: f64,
}

impl PhaseDistance {
    pub fn total(&self) -> f64 {
        self.cells as f64 + self.strategy
    }
}

/// Phase-space distance between `(s_a, e_a)` and `(s_b, e_b)`.
///
/// The strategies are finite prefixes; element `i` of a slice is the term of
/// weight `10^-(i+1)`. Only the common prefix of length `K` is compared and
/// the remaining terms are bounded by `(N-1)/N * 10^-K`.
pub fn phase_distance(
    s_a: &[usize],
    e_a: &CellState,
    s_b: &[usize],
    e_b: &CellState,
) -> Result<PhaseDistance, AnalysisError> {
    let n = e_a.len();
    if e_b.len() != n {
        return Err(AnalysisError::CellCountMismatch(n, e_b.len()));
    }
    let k = s_a.len().min(s_b.len());
    for &value in s_a[..k].iter().chain(&s_b[..k]) {
        if !(1..=n).contains(&value) {
            return Err(AnalysisError::StrategyOutOfRange { value, n_cells: n });
        }
    }
    // smallest terms first
    let sum = s_a[..k]
        .iter()
        .zip(&s_b[..k])
        .enumerate()
        .rev()
        .map(|(i, (&a, &b))| a.abs_diff(b) as f64 / libm::pow(10.0, (i + 1) as f64))
        .sum::<f64>();
    let nf = n as f64;
    Ok(PhaseDistance {
        cells: e_a.hamming(e_b),
        strategy: 9.0 / nf * sum,
        tail_bound: (nf - 1.0) / nf * libm::pow(10.0, -(k as f64)),
    })
}

/// The first `k` strategy values a generator for `config` applies, gap draws
/// skipped.
pub fn strategy_prefix(config: &GeneratorConfig, k: usize) -> Result<Vec<usize>, AnalysisError> {
    let (_, y0) = config.initial_values();
    let mut driver = LogisticDriver::new(y0, config.gaps().clone());
    let mut prefix = Vec::with_capacity(k);
    while prefix.len() < k {
        let gap = driver.next_gap()? as usize;
        for _ in 0..gap.min(k - prefix.len()) {
            prefix.push(driver.next_strategy(config.n_cells())?);
        }
    }
    Ok(prefix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    #[test]
    fn identical_points_are_at_zero() {
        let e = CellState::from_big_endian(0b10110, 5);
        let s = [1, 4, 2, 5, 3];
        let d = phase_distance(&s, &e, &s, &e).unwrap();
        assert_eq!(d.total(), 0.0);
    }

    #[test]
    fn complementary_cells_count_fully() {
        let e = CellState::from_big_endian(0b10110, 5);
        let s = [2; 20];
        let d = phase_distance(&s, &e, &s, &e.complement()).unwrap();
        assert_eq!(d.cells, 5);
        assert_eq!(d.total(), 5.0);
    }

    #[test]
    fn constant_strategies_one_apart() {
        let e = CellState::zeros(5);
        let d = phase_distance(&[1; 30], &e, &[2; 30], &e).unwrap();
        // (9/5) * sum 10^-k = (9/5) / 9
        assert!((d.strategy - 0.2).abs() < 1e-12);
        assert!(d.tail_bound < 1e-30);
    }

    #[test]
    fn tail_bound_follows_prefix_length() {
        let e = CellState::zeros(4);
        let d = phase_distance(&[1; 15], &e, &[4; 40], &e).unwrap();
        assert!((d.tail_bound - 0.75e-15).abs() < 1e-28);
        // the common prefix alone: (9/4) * 3 * (1 - 10^-15) / 9
        assert!((d.strategy - 0.75).abs() < 1e-12);
    }

    #[test]
    fn validation() {
        let e5 = CellState::zeros(5);
        let e4 = CellState::zeros(4);
        assert_eq!(
            phase_distance(&[1], &e5, &[1], &e4),
            Err(AnalysisError::CellCountMismatch(5, 4))
        );
        assert_eq!(
            phase_distance(&[6], &e5, &[1], &e5),
            Err(AnalysisError::StrategyOutOfRange {
                value: 6,
                n_cells: 5
            })
        );
    }

    #[test]
    fn prefix_skips_gap_draws() {
        use crate::generator::{strategy_from_y, GapSet, SeedSpec};
        let config = GeneratorConfig::new(
            5,
            GapSet::new(vec![4, 5]).unwrap(),
            SeedSpec::TimeDerived { t: 484_076 },
        )
        .unwrap();
        let prefix = strategy_prefix(&config, 7).unwrap();
        // y0 feeds the first gap (4), y1..y4 the strategies, y5 the next gap
        let mut y = 0.484_076;
        let mut ys = vec![];
        for _ in 0..9 {
            ys.push(y);
            y = crate::generator::logistic_step(y);
        }
        let expected: Vec<usize> = [1, 2, 3, 4, 6, 7, 8]
            .iter()
            .map(|&i| strategy_from_y(ys[i], 5))
            .collect();
        assert_eq!(prefix, expected);
        assert!(strategy_prefix(&config, 0).unwrap().is_empty());
    }

    fn point() -> impl Strategy<Value = (Vec<usize>, CellState)> {
        (proptest::collection::vec(1usize..=6, 25), 0u64..64)
            .prop_map(|(s, x)| (s, CellState::from_big_endian(x, 6)))
    }

    proptest! {
        #[test]
        fn metric_axioms(a in point(), b in point(), c in point()) {
            let d = |p: &(Vec<usize>, CellState), q: &(Vec<usize>, CellState)| {
                phase_distance(&p.0, &p.1, &q.0, &q.1).unwrap()
            };
            let ab = d(&a, &b);
            prop_assert_eq!(d(&a, &a).total(), 0.0);
            prop_assert_eq!(ab.cells, d(&b, &a).cells);
            prop_assert_eq!(ab.strategy, d(&b, &a).strategy);
            prop_assert!(ab.total() <= d(&a, &c).total() + d(&c, &b).total() + 1e-12);
            prop_assert!(ab.cells <= 6);
            prop_assert!((0.0..=1.0).contains(&ab.strategy));
            if a != b {
                prop_assert!(ab.total() > 0.0);
            }
        }
    }
}
