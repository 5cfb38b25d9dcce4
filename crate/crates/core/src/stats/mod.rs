//! Correlation, principal component analysis and fitness-distance correlation.

mod correlation;
mod dataset;
mod fdc;
mod jacobi;
mod matrix;

pub use correlation::{pearson, CorrelationAccumulator};
pub use dataset::{
    build_dataset, build_dataset_with_cap, component_score_correlations, correlation_matrix, correlation_study,
    correlation_study_with_cap, CorrelationStudy, DistanceDataset, SamplingMode, EXHAUSTIVE_CAP,
};
pub use fdc::{fdc, fdc_table};
pub use jacobi::{jacobi_eigen, PcaResult, MAX_SWEEPS, OFF_DIAGONAL_TOLERANCE, SYMMETRY_TOLERANCE};
pub use matrix::Matrix;
