//! Resolution of the generator flags shared by all subcommands.
//!
//! Later sources override earlier ones: configuration file, then `--scheme`,
//! then `--n-cells` / `--m-set`, then the seed flags. Without any scheme
//! source the default is scheme-6.

use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use chaotic_prng::{GapSet, GeneratorConfig, SeedSpec};
use clap::Args;

use crate::config_file::{parse_cells, parse_config, parse_gap_list, PartialConfig};
use crate::scheme::SchemeSpec;
use crate::CliError;

pub const DEFAULT_SCHEME: &str = "scheme-6";

#[derive(Args, Clone, Debug, Default)]
pub struct GeneratorArgs {
    /// Configuration file of `key = value` lines.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Named scheme, scheme-1 to scheme-6.
    #[arg(long)]
    pub scheme: Option<SchemeSpec>,
    /// System size N.
    #[arg(long, value_name = "N")]
    pub n_cells: Option<usize>,
    /// Return-gap set M, comma-separated.
    #[arg(long, value_name = "LIST", value_parser = parse_gap_list)]
    pub m_set: Option<GapSet>,
    /// Seed digits t: y0 = 0.t and x0 = t mod 2^N.
    #[arg(long, value_name = "T", conflicts_with_all = ["x0", "y0", "seed_from_time"])]
    pub seed: Option<u64>,
    /// Initial cells, cell 1 first.
    #[arg(long, value_name = "BITS", requires = "y0", value_parser = parse_cells)]
    pub x0: Option<chaotic_prng::CellState>,
    /// Initial logistic value in (0, 1).
    #[arg(long, value_name = "Y", requires = "x0")]
    pub y0: Option<f64>,
    /// Seed from the microsecond part of the current time; the value used is
    /// printed.
    #[arg(long, conflicts_with_all = ["x0", "y0"])]
    pub seed_from_time: bool,
    /// Start output after the first block instead of with x0.
    #[arg(long)]
    pub no_emit_initial: bool,
}

/// Microseconds within the current second.
pub fn time_seed() -> u64 {
    let now = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .unwrap_or_default();
    u64::from(now.subsec_micros())
}

impl GeneratorArgs {
    fn file(&self) -> Result<PartialConfig, CliError> {
        match &self.config {
            None => Ok(PartialConfig::default()),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
                parse_config(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
            }
        }
    }

    /// The system size and gap set.
    pub fn scheme(&self) -> Result<SchemeSpec, CliError> {
        let file = self.file()?;
        self.scheme_with(&file)
    }

    fn scheme_with(&self, file: &PartialConfig) -> Result<SchemeSpec, CliError> {
        let override_with = |base: SchemeSpec, n: Option<usize>, m: Option<GapSet>| {
            if n.is_none() && m.is_none() {
                base
            } else {
                SchemeSpec::custom(n.unwrap_or(base.n_cells), m.unwrap_or(base.gaps))
            }
        };
        let base = match &self.scheme {
            Some(scheme) => scheme.clone(),
            None => override_with(
                SchemeSpec::named(DEFAULT_SCHEME).expect("default scheme exists"),
                file.n_cells,
                file.m_set.clone(),
            ),
        };
        Ok(override_with(base, self.n_cells, self.m_set.clone()))
    }

    /// Full configuration; some seed source is mandatory.
    pub fn config(&self) -> Result<(SchemeSpec, GeneratorConfig), CliError> {
        let file = self.file()?;
        let scheme = self.scheme_with(&file)?;
        let seed = if let Some(t) = self.seed {
            SeedSpec::TimeDerived { t }
        } else if let (Some(x0), Some(y0)) = (self.x0, self.y0) {
            SeedSpec::Explicit { x0, y0 }
        } else if self.seed_from_time {
            let t = time_seed();
            eprintln!("seed from time: t = {t} (rerun with --seed {t})");
            SeedSpec::TimeDerived { t }
        } else if let Some(seed) = file.seed.clone() {
            seed
        } else {
            return Err(CliError::usage(
                "no seed given; pass --seed, --x0 with --y0, --seed-from-time or a config file with a seed",
            ));
        };
        let emit_initial = !self.no_emit_initial && file.emit_initial.unwrap_or(true);
        let config = GeneratorConfig::new(scheme.n_cells, scheme.gaps.clone(), seed)?
            .with_emit_initial(emit_initial);
        Ok((scheme, config))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn args() -> GeneratorArgs {
        GeneratorArgs::default()
    }

    #[test]
    fn default_scheme_and_seed_requirement() {
        assert_eq!(args().scheme().unwrap().name, "scheme-6");
        assert!(matches!(args().config(), Err(CliError::Usage(_))));
    }

    #[test]
    fn flags_override_scheme() {
        let a = GeneratorArgs {
            scheme: SchemeSpec::named("scheme-1"),
            m_set: Some(GapSet::new(vec![2, 3]).unwrap()),
            seed: Some(123),
            ..args()
        };
        let (scheme, config) = a.config().unwrap();
        assert_eq!(scheme.name, "custom");
        assert_eq!(config.n_cells(), 8);
        assert_eq!(config.gaps().as_slice(), [2, 3]);
        assert!(config.emit_initial());
    }

    #[test]
    fn config_file_then_flags() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(
            f,
            "n_cells = 6\nm_set = 3\nseed.t = 77\nemit_initial = false"
        )
        .unwrap();
        let a = GeneratorArgs {
            config: Some(f.path().to_owned()),
            ..args()
        };
        let (scheme, config) = a.config().unwrap();
        assert_eq!((scheme.n_cells, scheme.gaps.as_slice()), (6, &[3][..]));
        assert_eq!(config.seed(), &SeedSpec::TimeDerived { t: 77 });
        assert!(!config.emit_initial());
        let b = GeneratorArgs {
            seed: Some(78),
            n_cells: Some(7),
            ..a
        };
        let (_, config) = b.config().unwrap();
        assert_eq!(config.seed(), &SeedSpec::TimeDerived { t: 78 });
        assert_eq!(config.n_cells(), 7);
    }

    #[test]
    fn seed_errors_are_classified() {
        let degenerate = GeneratorArgs {
            seed: Some(5),
            ..args()
        };
        assert!(matches!(degenerate.config(), Err(CliError::Runtime(_))));
        let wrong_length = GeneratorArgs {
            x0: Some(parse_cells("101").unwrap()),
            y0: Some(0.3),
            ..args()
        };
        assert!(matches!(wrong_length.config(), Err(CliError::Usage(_))));
    }
}
