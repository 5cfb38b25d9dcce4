//! Fitness-landscape analysis over permutations: distance measures,
//! correlation/PCA and fitness-distance statistics, benchmark landscapes,
//! mutation operators and a mutation-only evolutionary algorithm.
//!
//! Statistics are generic over [`Real`] (`f32` or `f64`); distances are exact
//! integers wherever the measure is integral.

pub mod distances;
pub mod ea;
pub mod error;
pub mod landscapes;
pub mod mutation;
pub mod permutation;
pub mod rng;
pub mod scalar;
pub mod stats;

pub use distances::{DistanceKind, EditCosts, Measure, ReversalDistanceTable, MEASURE_NAMES, PCA_MEASURE_NAMES};
pub use ea::{compare, run, sus_select, CompareSettings, Comparison, EaConfig, RunTrace};
pub use error::{Error, Result};
pub use landscapes::{Landscape, LandscapeSpec};
pub use mutation::{MutationOperator, OPERATOR_NAMES};
pub use permutation::Permutation;
pub use rng::RandomSource;
pub use scalar::Real;
pub use stats::{CorrelationStudy, DistanceDataset, Matrix, PcaResult, SamplingMode};

/// Double-precision statistics, used by the command-line tools.
pub type MatrixF64 = Matrix<f64>;
pub type PcaResultF64 = PcaResult<f64>;
pub type DistanceDatasetF64 = DistanceDataset<f64>;
pub type CorrelationStudyF64 = CorrelationStudy<f64>;

/// Single-precision statistics for memory-bound exploratory runs.
pub type MatrixF32 = Matrix<f32>;
pub type PcaResultF32 = PcaResult<f32>;
pub type DistanceDatasetF32 = DistanceDataset<f32>;
pub type CorrelationStudyF32 = CorrelationStudy<f32>;
