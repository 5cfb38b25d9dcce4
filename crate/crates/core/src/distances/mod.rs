//! Permutation distance measures.
//!
//! Every measure is available as a free function on a pair of permutations and
//! through the [`Measure`] enum, which the experiment drivers address by name.

mod edges;
mod edit;
mod positional;
mod precedence;
mod reversal;

use std::fmt;
use std::sync::Arc;

pub use edges::{acyclic_edge, cyclic_edge, cyclic_rtype, rtype};
pub use edit::{edit_distance, EditCosts};
pub use positional::{deviation, exact_match, interchange, lee, normalized_deviation, squared_deviation};
pub use precedence::{kendall_tau, reinsertion};
pub use reversal::{build_reversal_table, reversal_edit, ReversalDistanceTable, DEFAULT_REVERSAL_CAP};

use crate::error::{Error, Result};
use crate::permutation::{check_lengths, Permutation};

/// `s[i]` = index in `p2` of the element `p1[i]`.
pub(crate) fn relative_positions(p1: &Permutation, p2: &Permutation) -> Result<Vec<usize>> {
    check_lengths(p1, p2)?;
    let mut inv2 = vec![0; p2.len()];
    for (i, &e) in p2.iter().enumerate() {
        inv2[e] = i;
    }
    Ok(p1.iter().map(|&e| inv2[e]).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceKind {
    Metric,
    /// Distinct permutations may be at distance zero (rotations, reversals).
    PseudoMetric,
    /// Zero only on equal permutations and symmetric, but the triangle
    /// inequality fails: squared deviation is a squared Euclidean distance on
    /// position vectors, e.g. d(0123, 0132) = d(0132, 0312) = 2 while
    /// d(0123, 0312) = 6.
    Semimetric,
}

/// Registry names, in the order used for correlation tables.
pub const MEASURE_NAMES: [&str; 14] = [
    "exact-match",
    "interchange",
    "acyclic-edge",
    "cyclic-edge",
    "rtype",
    "cyclic-rtype",
    "kendall-tau",
    "reinsertion",
    "deviation",
    "normalized-deviation",
    "squared-deviation",
    "lee",
    "edit",
    "reversal-edit",
];

/// The eleven measures used for principal component analysis (all but edit,
/// normalized deviation and reversal edit).
pub const PCA_MEASURE_NAMES: [&str; 11] = [
    "exact-match",
    "interchange",
    "acyclic-edge",
    "cyclic-edge",
    "rtype",
    "cyclic-rtype",
    "kendall-tau",
    "reinsertion",
    "deviation",
    "squared-deviation",
    "lee",
];

#[derive(Debug, Clone)]
pub enum Measure {
    ExactMatch,
    Interchange,
    AcyclicEdge,
    CyclicEdge,
    RType,
    CyclicRType,
    KendallTau,
    Reinsertion,
    Deviation,
    NormalizedDeviation,
    SquaredDeviation,
    Lee,
    Edit(EditCosts),
    ReversalEdit(Arc<ReversalDistanceTable>),
}

impl Measure {
    /// Looks a measure up by registry name. `n` is only consulted by
    /// `reversal-edit`, which builds its lookup table for that length.
    pub fn from_name(name: &str, n: usize) -> Result<Measure> {
        Ok(match name {
            "exact-match" => Measure::ExactMatch,
            "interchange" => Measure::Interchange,
            "acyclic-edge" => Measure::AcyclicEdge,
            "cyclic-edge" => Measure::CyclicEdge,
            "rtype" => Measure::RType,
            "cyclic-rtype" => Measure::CyclicRType,
            "kendall-tau" => Measure::KendallTau,
            "reinsertion" => Measure::Reinsertion,
            "deviation" => Measure::Deviation,
            "normalized-deviation" => Measure::NormalizedDeviation,
            "squared-deviation" => Measure::SquaredDeviation,
            "lee" => Measure::Lee,
            "edit" => Measure::Edit(EditCosts::default()),
            "reversal-edit" => {
                Measure::ReversalEdit(Arc::new(ReversalDistanceTable::build(&Permutation::identity(n))?))
            }
            other => return Err(Error::UnknownMeasure(other.to_string())),
        })
    }

    /// Parses a comma-separated list of registry names.
    pub fn parse_list(names: &str, n: usize) -> Result<Vec<Measure>> {
        names.split(',').map(str::trim).filter(|s| !s.is_empty()).map(|s| Measure::from_name(s, n)).collect()
    }

    pub fn pca_defaults() -> Vec<Measure> {
        PCA_MEASURE_NAMES.iter().map(|name| Measure::from_name(name, 0).expect("registry name")).collect()
    }

    pub fn name(&self) -> &'static str {
        match self {
            Measure::ExactMatch => "exact-match",
            Measure::Interchange => "interchange",
            Measure::AcyclicEdge => "acyclic-edge",
            Measure::CyclicEdge => "cyclic-edge",
            Measure::RType => "rtype",
            Measure::CyclicRType => "cyclic-rtype",
            Measure::KendallTau => "kendall-tau",
            Measure::Reinsertion => "reinsertion",
            Measure::Deviation => "deviation",
            Measure::NormalizedDeviation => "normalized-deviation",
            Measure::SquaredDeviation => "squared-deviation",
            Measure::Lee => "lee",
            Measure::Edit(_) => "edit",
            Measure::ReversalEdit(_) => "reversal-edit",
        }
    }

    pub fn kind(&self) -> DistanceKind {
        match self {
            Measure::AcyclicEdge | Measure::CyclicEdge | Measure::CyclicRType => DistanceKind::PseudoMetric,
            Measure::SquaredDeviation => DistanceKind::Semimetric,
            _ => DistanceKind::Metric,
        }
    }

    /// Exact integer value, for every measure except normalized deviation and edit.
    pub fn evaluate_exact(&self, p1: &Permutation, p2: &Permutation) -> Result<Option<u64>> {
        Ok(Some(match self {
            Measure::ExactMatch => exact_match(p1, p2)?,
            Measure::Interchange => interchange(p1, p2)?,
            Measure::AcyclicEdge => acyclic_edge(p1, p2)?,
            Measure::CyclicEdge => cyclic_edge(p1, p2)?,
            Measure::RType => rtype(p1, p2)?,
            Measure::CyclicRType => cyclic_rtype(p1, p2)?,
            Measure::KendallTau => kendall_tau(p1, p2)?,
            Measure::Reinsertion => reinsertion(p1, p2)?,
            Measure::Deviation => deviation(p1, p2)?,
            Measure::SquaredDeviation => squared_deviation(p1, p2)?,
            Measure::Lee => lee(p1, p2)?,
            Measure::ReversalEdit(table) => table.distance_between(p1, p2)?,
            Measure::NormalizedDeviation | Measure::Edit(_) => return Ok(None),
        }))
    }

    pub fn evaluate(&self, p1: &Permutation, p2: &Permutation) -> Result<f64> {
        match self {
            Measure::NormalizedDeviation => normalized_deviation(p1, p2),
            Measure::Edit(costs) => {
                check_lengths(p1, p2)?;
                edit_distance(p1.as_slice(), p2.as_slice(), costs)
            }
            exact => Ok(exact.evaluate_exact(p1, p2)?.expect("integral measure") as f64),
        }
    }

    /// All permutations at distance zero from `target`: `{target}` for metrics,
    /// the reversal/rotation class for the pseudo-metrics.
    pub fn zero_class(&self, target: &Permutation) -> Vec<Permutation> {
        let n = target.len();
        let mut class = match self {
            Measure::AcyclicEdge => vec![target.clone(), target.reversed()],
            Measure::CyclicEdge => {
                (0..n).flat_map(|k| [target.rotated(k), target.rotated(k).reversed()]).collect()
            }
            Measure::CyclicRType => (0..n).map(|k| target.rotated(k)).collect(),
            _ => vec![target.clone()],
        };
        class.sort();
        class.dedup();
        class
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_round_trips_names() {
        for name in MEASURE_NAMES {
            let m = Measure::from_name(name, 4).unwrap();
            assert_eq!(m.name(), name);
        }
        assert_eq!(Measure::from_name("hamming", 4).unwrap_err(), Error::UnknownMeasure("hamming".into()));
    }

    #[test]
    fn parse_list_keeps_order() {
        let ms = Measure::parse_list("lee, kendall-tau,exact-match", 5).unwrap();
        let names: Vec<_> = ms.iter().map(Measure::name).collect();
        assert_eq!(names, ["lee", "kendall-tau", "exact-match"]);
    }

    #[test]
    fn evaluate_matches_free_functions() {
        let a = Permutation::new(vec![3, 0, 4, 1, 2]).unwrap();
        let b = Permutation::new(vec![1, 4, 0, 2, 3]).unwrap();
        assert_eq!(Measure::KendallTau.evaluate(&a, &b).unwrap(), kendall_tau(&a, &b).unwrap() as f64);
        assert_eq!(Measure::NormalizedDeviation.evaluate(&a, &b).unwrap(), deviation(&a, &b).unwrap() as f64 / 4.0);
        assert_eq!(Measure::Edit(EditCosts::default()).evaluate(&a, &a).unwrap(), 0.0);
        assert!(Measure::Edit(EditCosts::default()).evaluate(&a, &Permutation::identity(4)).is_err());
    }

    #[test]
    fn zero_class_sizes() {
        let t = Permutation::new(vec![2, 4, 1, 0, 3]).unwrap();
        assert_eq!(Measure::Lee.zero_class(&t).len(), 1);
        assert_eq!(Measure::AcyclicEdge.zero_class(&t).len(), 2);
        assert_eq!(Measure::CyclicRType.zero_class(&t).len(), 5);
        assert_eq!(Measure::CyclicEdge.zero_class(&t).len(), 10);
        for m in [Measure::AcyclicEdge, Measure::CyclicEdge, Measure::CyclicRType] {
            for q in m.zero_class(&t) {
                assert_eq!(m.evaluate(&t, &q).unwrap(), 0.0);
            }
        }
    }
}
