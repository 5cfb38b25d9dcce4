//! Plain-text (TOML) descriptions of landscapes, so experiments can be replayed.

use serde::{Deserialize, Serialize};

use crate::distances::Measure;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rng::RandomSource;

use super::{circle_atsp, circle_tsp, haystack, noisy_haystack, random_matrix_tsp, Landscape};

/// Names accepted by [`LandscapeSpec::preset`].
pub const PRESET_NAMES: [&str; 5] = ["L1", "L2", "L3", "L4", "L5"];

/// Construction parameters of a landscape.
///
/// Haystack targets are the identity when `target_seed` is absent and a
/// uniformly random permutation drawn from that seed otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LandscapeSpec {
    CircleTsp {
        n: usize,
    },
    CircleAtsp {
        n: usize,
    },
    Haystack {
        n: usize,
        measure: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        target_seed: Option<u64>,
    },
    NoisyHaystack {
        n: usize,
        measure: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        target_seed: Option<u64>,
        noise_seed: u64,
    },
    RandomTsp {
        n: usize,
        symmetric: bool,
        seed: u64,
    },
}

impl LandscapeSpec {
    /// The five example landscapes: circle TSP and ATSP on 20 cities, and noisy
    /// haystacks of length 10 under exact match, Kendall tau and Lee distance.
    pub fn preset(name: &str, seed: u64) -> Result<LandscapeSpec> {
        let noisy = |measure: &str| LandscapeSpec::NoisyHaystack {
            n: 10,
            measure: measure.into(),
            target_seed: Some(seed),
            noise_seed: seed ^ 0x6E6F_6973_65,
        };
        Ok(match name.to_ascii_uppercase().as_str() {
            "L1" => LandscapeSpec::CircleTsp { n: 20 },
            "L2" => LandscapeSpec::CircleAtsp { n: 20 },
            "L3" => noisy("exact-match"),
            "L4" => noisy("kendall-tau"),
            "L5" => noisy("lee"),
            _ => return Err(Error::UnknownLandscape(name.to_string())),
        })
    }

    pub fn n(&self) -> usize {
        match self {
            LandscapeSpec::CircleTsp { n }
            | LandscapeSpec::CircleAtsp { n }
            | LandscapeSpec::Haystack { n, .. }
            | LandscapeSpec::NoisyHaystack { n, .. }
            | LandscapeSpec::RandomTsp { n, .. } => *n,
        }
    }

    pub fn build(&self) -> Result<Landscape> {
        let target = |n: usize, seed: &Option<u64>| match seed {
            Some(s) => Permutation::random(n, &mut RandomSource::new(*s)),
            None if n >= 1 => Ok(Permutation::identity(n)),
            None => Err(Error::TooShort { what: "haystack", min: 1, len: n }),
        };
        match self {
            LandscapeSpec::CircleTsp { n } => circle_tsp(*n),
            LandscapeSpec::CircleAtsp { n } => circle_atsp(*n),
            LandscapeSpec::Haystack { n, measure, target_seed } => {
                haystack(*n, &target(*n, target_seed)?, Measure::from_name(measure, *n)?)
            }
            LandscapeSpec::NoisyHaystack { n, measure, target_seed, noise_seed } => {
                noisy_haystack(*n, &target(*n, target_seed)?, Measure::from_name(measure, *n)?, *noise_seed)
            }
            LandscapeSpec::RandomTsp { n, symmetric, seed } => {
                random_matrix_tsp(*n, *symmetric, &mut RandomSource::new(*seed))
            }
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("landscape spec serializes")
    }

    pub fn from_toml(text: &str) -> Result<LandscapeSpec> {
        toml::from_str(text).map_err(|e| Error::InvalidParameter(format!("landscape config: {e}")))
    }
}
