//! Named generator schemes.

use std::fmt;
use std::str::FromStr;

use chaotic_prng::GapSet;

/// A cell count and gap set, either one of the six named schemes or custom.
#[derive(Clone, Debug, PartialEq)]
pub struct SchemeSpec {
    pub name: String,
    pub n_cells: usize,
    pub gaps: GapSet,
}

const NAMED: [(&str, usize, &[u32]); 6] = [
    ("scheme-1", 8, &[1]),
    ("scheme-2", 8, &[8]),
    ("scheme-3", 8, &[1, 2, 3, 4, 5, 6, 7, 8]),
    ("scheme-4", 5, &[4, 5]),
    ("scheme-5", 5, &[9, 10]),
    ("scheme-6", 5, &[14, 15]),
];

impl SchemeSpec {
    pub fn named(name: &str) -> Option<Self> {
        NAMED
            .iter()
            .find(|(n, ..)| *n == name)
            .map(|&(name, n_cells, gaps)| Self {
                name: name.to_owned(),
                n_cells,
                gaps: GapSet::new(gaps.to_vec()).expect("named gap sets are valid"),
            })
    }

    pub fn custom(n_cells: usize, gaps: GapSet) -> Self {
        Self {
            name: "custom".to_owned(),
            n_cells,
            gaps,
        }
    }

    pub fn names() -> impl Iterator<Item = &'static str> {
        NAMED.iter().map(|(n, ..)| *n)
    }
}

impl FromStr for SchemeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::named(s).ok_or_else(|| {
            format!(
                "unknown scheme `{s}`; expected one of {}",
                Self::names().collect::<Vec<_>>().join(", ")
            )
        })
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (N = {}, M = {{{}}})",
            self.name,
            self.n_cells,
            join(self.gaps.as_slice())
        )
    }
}

pub(crate) fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
