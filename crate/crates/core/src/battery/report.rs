use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{
    approximate_entropy, block_frequency, cumulative_sums, frequency_monobit, longest_run,
    p_uniformity_with_min, runs_test, serial, spectral_dft, BatteryError, Strictness, TestResult,
    Uniformity, DEFAULT_APEN_M, DEFAULT_BLOCK_LEN, DEFAULT_MIN_SEQUENCES, DEFAULT_SERIAL_M,
};
use crate::generator::{generate_bits, GeneratorConfig, SeedSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatteryOptions {
    pub strictness: Strictness,
    pub block_len: usize,
    pub serial_m: usize,
    pub apen_m: usize,
    /// Sequence count below which `P_T` is flagged as unreliable.
    pub min_sequences: usize,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        Self {
            strictness: Strictness::Strict,
            block_len: DEFAULT_BLOCK_LEN,
            serial_m: DEFAULT_SERIAL_M,
            apen_m: DEFAULT_APEN_M,
            min_sequences: DEFAULT_MIN_SEQUENCES,
        }
    }
}

/// One test aggregated over every sequence of a run.
#[derive(Clone, Debug, PartialEq)]
pub struct TestSummary {
    pub test: &'static str,
    /// Parameter label such as `M=20000`, empty when the test has none.
    pub param: String,
    /// One P-value per sequence, in sequence order.
    pub p_values: Vec<f64>,
    /// Sequences on which a prerequisite gate failed.
    pub gated: usize,
    pub uniformity: Uniformity,
}

impl TestSummary {
    pub fn p_t(&self) -> f64 {
        self.uniformity.p_t
    }

    pub fn passed(&self) -> bool {
        self.uniformity.passed()
    }

    /// Sequences whose P-value reaches `alpha`.
    pub fn count_at_least(&self, alpha: f64) -> usize {
        self.p_values.iter().filter(|&&p| p >= alpha).count()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BatteryReport {
    pub master_seed: u64,
    pub n_sequences: usize,
    pub seq_len: usize,
    /// Sorted by test name.
    pub summaries: Vec<TestSummary>,
    pub warnings: Vec<String>,
}

impl BatteryReport {
    pub fn all_passed(&self) -> bool {
        self.summaries.iter().all(TestSummary::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TestSummary> {
        self.summaries.iter().filter(|s| !s.passed())
    }

    pub fn get(&self, test: &str) -> Option<&TestSummary> {
        self.summaries.iter().find(|s| s.test == test)
    }

    /// Mean `P_T` over the sub-statistics of a multi-statistic test such as
    /// `serial` or `cumulative_sums`.
    pub fn average_p_t(&self, group: &str) -> Option<f64> {
        let members: Vec<f64> = self
            .summaries
            .iter()
            .filter(|s| {
                s.test
                    .strip_prefix(group)
                    .is_some_and(|rest| rest.starts_with('.'))
            })
            .map(TestSummary::p_t)
            .collect();
        if members.is_empty() {
            None
        } else {
            Some(members.iter().sum::<f64>() / members.len() as f64)
        }
    }
}

fn battery_on(
    bits: &[bool],
    opts: &BatteryOptions,
) -> Result<Vec<(TestResult, String)>, BatteryError> {
    let st = opts.strictness;
    let (cusum_f, cusum_b) = cumulative_sums(bits, st)?;
    let (serial_1, serial_2) = serial(bits, opts.serial_m, st)?;
    let serial_label = format!("m={}", opts.serial_m);
    Ok(alloc::vec![
        (
            approximate_entropy(bits, opts.apen_m, st)?,
            format!("m={}", opts.apen_m)
        ),
        (
            block_frequency(bits, opts.block_len, st)?,
            format!("M={}", opts.block_len)
        ),
        (cusum_b, String::new()),
        (cusum_f, String::new()),
        (frequency_monobit(bits, st)?, String::new()),
        (longest_run(bits)?, String::new()),
        (runs_test(bits, st)?, String::new()),
        (serial_1, serial_label.clone()),
        (serial_2, serial_label),
        (spectral_dft(bits, st)?, String::new()),
    ])
}

/// Runs every test on `n_sequences` sequences of `seq_len` bits and
/// aggregates `P_T` per test.
///
/// The configuration's seed must be time-derived; its value `t` is the master
/// seed and sequence `i` is generated from seed `t + i`.
pub fn run_battery(
    config: &GeneratorConfig,
    n_sequences: usize,
    seq_len: usize,
    opts: &BatteryOptions,
) -> Result<BatteryReport, BatteryError> {
    let SeedSpec::TimeDerived { t: master } = *config.seed() else {
        return Err(BatteryError::MasterSeedRequired);
    };
    if n_sequences == 0 {
        return Err(BatteryError::NoPValues);
    }
    let mut columns: Vec<(&'static str, String, Vec<f64>, usize)> = Vec::new();
    for index in 0..n_sequences {
        let t = master + index as u64;
        let sequence_err = |source| BatteryError::Sequence { index, t, source };
        let seq_config = config
            .with_seed(SeedSpec::TimeDerived { t })
            .map_err(|e| sequence_err(e.into()))?;
        let bits = generate_bits(&seq_config, seq_len).map_err(sequence_err)?;
        let results = battery_on(&bits, opts)?;
        if columns.is_empty() {
            columns = results
                .iter()
                .map(|(r, label)| (r.test, label.clone(), Vec::with_capacity(n_sequences), 0))
                .collect();
        }
        for (column, (result, _)) in columns.iter_mut().zip(results) {
            column.2.push(result.p_value);
            column.3 += usize::from(result.prerequisite_failed);
        }
    }

    let summaries = columns
        .into_iter()
        .map(|(test, param, p_values, gated)| {
            let uniformity = p_uniformity_with_min(&p_values, opts.min_sequences)?;
            Ok(TestSummary {
                test,
                param,
                p_values,
                gated,
                uniformity,
            })
        })
        .collect::<Result<Vec<_>, BatteryError>>()?;
    debug_assert!(summaries.windows(2).all(|w| w[0].test < w[1].test));

    let mut warnings = Vec::new();
    if n_sequences < opts.min_sequences {
        warnings.push(format!(
            "only {n_sequences} sequences; P_T is unreliable below {}",
            opts.min_sequences
        ));
    }
    if opts.strictness == Strictness::Relaxed {
        warnings.push(String::from(
            "relaxed mode: NIST minimum input sizes were not enforced",
        ));
    }
    Ok(BatteryReport {
        master_seed: master,
        n_sequences,
        seq_len,
        summaries,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{CellState, GapSet};
    use alloc::vec;

    fn scheme6(t: u64) -> GeneratorConfig {
        GeneratorConfig::new(
            5,
            GapSet::new(vec![14, 15]).unwrap(),
            SeedSpec::TimeDerived { t },
        )
        .unwrap()
    }

    fn small_opts() -> BatteryOptions {
        BatteryOptions {
            strictness: Strictness::Relaxed,
            block_len: 1000,
            serial_m: 4,
            apen_m: 3,
            ..BatteryOptions::default()
        }
    }

    #[test]
    fn report_is_sorted_and_complete() {
        let report = run_battery(&scheme6(484_076), 3, 4000, &small_opts()).unwrap();
        let names: Vec<&str> = report.summaries.iter().map(|s| s.test).collect();
        assert_eq!(
            names,
            [
                "approximate_entropy",
                "block_frequency",
                "cumulative_sums.backward",
                "cumulative_sums.forward",
                "frequency",
                "longest_run",
                "runs",
                "serial.1",
                "serial.2",
                "spectral_dft",
            ]
        );
        assert!(report.summaries.iter().all(|s| s.p_values.len() == 3));
        assert_eq!(report.warnings.len(), 2);
        assert!(report.average_p_t("serial").is_some());
        assert!(report.average_p_t("seri").is_none());
    }

    #[test]
    fn same_master_seed_same_report() {
        let a = run_battery(&scheme6(123_457), 2, 3000, &small_opts()).unwrap();
        let b = run_battery(&scheme6(123_457), 2, 3000, &small_opts()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn single_sequence_is_flagged() {
        let report = run_battery(&scheme6(484_076), 1, 3000, &small_opts()).unwrap();
        assert!(report.summaries.iter().all(|s| s.uniformity.small_sample));
        assert!(report.warnings[0].contains("unreliable"));
    }

    #[test]
    fn explicit_seed_is_refused() {
        let config = GeneratorConfig::new(
            5,
            GapSet::new(vec![14, 15]).unwrap(),
            SeedSpec::Explicit {
                x0: CellState::zeros(5),
                y0: 0.3,
            },
        )
        .unwrap();
        assert_eq!(
            run_battery(&config, 2, 1000, &small_opts()),
            Err(BatteryError::MasterSeedRequired)
        );
    }

    #[test]
    fn degenerate_sequence_seed_aborts_with_context() {
        // 249_998, 249_999, then 250_000 -> y0 = 0.25
        let err = run_battery(&scheme6(249_998), 3, 1000, &small_opts()).unwrap_err();
        assert!(matches!(
            err,
            BatteryError::Sequence {
                index: 2,
                t: 250_000,
                ..
            }
        ));
    }

    #[test]
    fn too_short_sequences_propagate() {
        let err = run_battery(&scheme6(484_076), 2, 50, &BatteryOptions::default()).unwrap_err();
        assert!(matches!(err, BatteryError::TooShort { .. }));
    }
}
