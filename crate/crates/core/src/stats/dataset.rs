//! Distance datasets: one row per permutation, one column per measure, each
//! entry the distance from that permutation to a fixed reference.

use rayon::prelude::*;

use crate::distances::Measure;
use crate::error::{Error, Result};
use crate::permutation::{factorial, Permutation};
use crate::rng::RandomSource;
use crate::scalar::Real;

use super::correlation::{pearson, CorrelationAccumulator};
use super::jacobi::PcaResult;
use super::matrix::Matrix;

/// Largest `n` allowed for exhaustive enumeration by default.
pub const EXHAUSTIVE_CAP: usize = 12;

/// Rows per work unit. Fixed so results do not depend on the thread count.
const CHUNK: usize = 1 << 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplingMode {
    /// Every permutation of length `n`, in lexicographic order.
    Exhaustive,
    /// `samples` independent uniform permutations; chunk `c` draws from
    /// `RandomSource::new(seed).child(c)`.
    Sampled { samples: usize, seed: u64 },
}

impl SamplingMode {
    fn rows(&self, n: usize, cap: usize) -> Result<usize> {
        match *self {
            SamplingMode::Exhaustive => {
                if n > cap {
                    return Err(Error::CapExceeded { what: "exhaustive enumeration", n, cap });
                }
                Ok(factorial(n) as usize)
            }
            SamplingMode::Sampled { samples, .. } => Ok(samples),
        }
    }

    /// Calls `visit` on every permutation of chunk `c` in order.
    fn visit_chunk(&self, n: usize, rows: usize, c: usize, mut visit: impl FnMut(&Permutation) -> Result<()>) -> Result<()> {
        let start = c * CHUNK;
        let len = CHUNK.min(rows - start);
        match *self {
            SamplingMode::Exhaustive => {
                let mut q = Permutation::unrank(n, start as u64)?;
                for i in 0..len {
                    if i > 0 {
                        q.advance_lexicographic();
                    }
                    visit(&q)?;
                }
            }
            SamplingMode::Sampled { seed, .. } => {
                let mut rng = RandomSource::new(seed).child(c as u64);
                for _ in 0..len {
                    visit(&Permutation::random(n, &mut rng)?)?;
                }
            }
        }
        Ok(())
    }
}

/// Observations of `k` measures, row-major.
#[derive(Debug, Clone)]
pub struct DistanceDataset<T> {
    measure_names: Vec<String>,
    rows: Vec<Vec<T>>,
}

impl<T: Real> DistanceDataset<T> {
    pub fn new(measure_names: Vec<String>, rows: Vec<Vec<T>>) -> Result<Self> {
        let k = measure_names.len();
        if rows.len() < 2 {
            return Err(Error::UndefinedCorrelation("a dataset needs at least two rows".into()));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != k) {
            return Err(Error::LengthMismatch { left: k, right: bad.len() });
        }
        Ok(Self { measure_names, rows })
    }

    pub fn measure_names(&self) -> &[String] {
        &self.measure_names
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        self.rows.iter().map(|r| r[j]).collect()
    }
}

fn distance_row<T: Real>(measures: &[Measure], q: &Permutation, reference: &Permutation, row: &mut [T]) -> Result<()> {
    for (slot, m) in row.iter_mut().zip(measures) {
        *slot = T::lit(m.evaluate(q, reference)?);
    }
    Ok(())
}

fn validate(n: usize, measures: &[Measure], reference: &Permutation) -> Result<()> {
    if reference.len() != n {
        return Err(Error::LengthMismatch { left: n, right: reference.len() });
    }
    if measures.is_empty() {
        return Err(Error::InvalidParameter("no measures selected".into()));
    }
    for m in measures {
        m.evaluate(reference, reference)?;
    }
    Ok(())
}

/// Materializes the dataset. Meant for moderate sizes; see [`correlation_study`]
/// for the streaming path used on millions of rows.
pub fn build_dataset<T: Real>(
    n: usize,
    measures: &[Measure],
    mode: SamplingMode,
    reference: &Permutation,
) -> Result<DistanceDataset<T>> {
    build_dataset_with_cap(n, measures, mode, reference, EXHAUSTIVE_CAP)
}

pub fn build_dataset_with_cap<T: Real>(
    n: usize,
    measures: &[Measure],
    mode: SamplingMode,
    reference: &Permutation,
    cap: usize,
) -> Result<DistanceDataset<T>> {
    let rows = mode.rows(n, cap)?;
    validate(n, measures, reference)?;
    let chunks: Vec<Vec<Vec<T>>> = (0..rows.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut out = Vec::new();
            mode.visit_chunk(n, rows, c, |q| {
                let mut row = vec![T::zero(); measures.len()];
                distance_row(measures, q, reference, &mut row)?;
                out.push(row);
                Ok(())
            })?;
            Ok(out)
        })
        .collect::<Result<_>>()?;
    DistanceDataset::new(measures.iter().map(|m| m.name().to_string()).collect(), chunks.concat())
}

/// Pearson correlation matrix of the dataset's columns (single streaming pass).
pub fn correlation_matrix<T: Real>(data: &DistanceDataset<T>) -> Result<Matrix<T>> {
    let mut acc = CorrelationAccumulator::new(data.rows[0].clone());
    data.rows.iter().for_each(|r| acc.push(r));
    acc.correlation()
}

/// Correlation matrix of a distance dataset computed without materializing it.
#[derive(Debug, Clone)]
pub struct CorrelationStudy<T> {
    pub measure_names: Vec<String>,
    pub rows: usize,
    pub means: Vec<T>,
    pub correlation: Matrix<T>,
}

pub fn correlation_study<T: Real>(
    n: usize,
    measures: &[Measure],
    mode: SamplingMode,
    reference: &Permutation,
) -> Result<CorrelationStudy<T>> {
    correlation_study_with_cap(n, measures, mode, reference, EXHAUSTIVE_CAP)
}

pub fn correlation_study_with_cap<T: Real>(
    n: usize,
    measures: &[Measure],
    mode: SamplingMode,
    reference: &Permutation,
    cap: usize,
) -> Result<CorrelationStudy<T>> {
    let rows = mode.rows(n, cap)?;
    validate(n, measures, reference)?;
    if rows < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two observations".into()));
    }
    let k = measures.len();
    let mut pivot = None;
    mode.visit_chunk(n, rows, 0, |q| {
        if pivot.is_none() {
            let mut row = vec![T::zero(); k];
            distance_row(measures, q, reference, &mut row)?;
            pivot = Some(row);
        }
        Ok(())
    })?;
    let pivot = pivot.expect("at least one row");
    let partials: Vec<CorrelationAccumulator<T>> = (0..rows.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut acc = CorrelationAccumulator::new(pivot.clone());
            let mut row = vec![T::zero(); k];
            mode.visit_chunk(n, rows, c, |q| {
                distance_row(measures, q, reference, &mut row)?;
                acc.push(&row);
                Ok(())
            })?;
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let mut total = CorrelationAccumulator::new(pivot);
    partials.iter().for_each(|p| total.merge(p));
    Ok(CorrelationStudy {
        measure_names: measures.iter().map(|m| m.name().to_string()).collect(),
        rows: total.count(),
        means: total.means(),
        correlation: total.correlation()?,
    })
}

/// Correlations between each original column and each principal component
/// score, computed from the data rather than from the eigenvectors.
pub fn component_score_correlations<T: Real>(data: &DistanceDataset<T>, pca: &PcaResult<T>) -> Result<Matrix<T>> {
    let k = data.measure_names.len();
    let m = T::from_count(data.len());
    let columns: Vec<Vec<T>> = (0..k).map(|j| data.column(j)).collect();
    let standardized: Vec<Vec<T>> = columns
        .iter()
        .map(|col| {
            let mean = col.iter().copied().sum::<T>() / m;
            let sd = (col.iter().map(|&x| (x - mean) * (x - mean)).sum::<T>() / m).sqrt();
            col.iter().map(|&x| (x - mean) / sd).collect()
        })
        .collect();
    let mut out = Matrix::zeros(k);
    for comp in 0..k {
        let scores: Vec<T> = (0..data.len())
            .map(|r| (0..k).map(|i| standardized[i][r] * pca.eigenvectors[(i, comp)]).sum())
            .collect();
        for (i, col) in columns.iter().enumerate() {
            out[(i, comp)] = pearson(col, &scores)?;
        }
    }
    Ok(out)
}
