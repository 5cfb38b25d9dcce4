//! Fitness-distance correlation.

use rayon::prelude::*;

use crate::distances::Measure;
use crate::error::{Error, Result};
use crate::landscapes::Landscape;
use crate::permutation::Permutation;
use crate::rng::RandomSource;
use crate::scalar::Real;

use super::correlation::CorrelationAccumulator;

const CHUNK: usize = 1 << 12;

/// `[cost, min-distance-to-optimum under each measure]`.
fn observation<T: Real>(landscape: &Landscape, optima: &[Permutation], measures: &[Measure], q: &Permutation, row: &mut [T]) -> Result<()> {
    row[0] = T::lit(landscape.cost(q)?);
    for (slot, m) in row[1..].iter_mut().zip(measures) {
        let mut best = f64::INFINITY;
        for opt in optima {
            best = best.min(m.evaluate(opt, q)?);
        }
        *slot = T::lit(best);
    }
    Ok(())
}

fn optima(landscape: &Landscape) -> Result<&[Permutation]> {
    match landscape.optima() {
        Some(o) if !o.is_empty() => Ok(o),
        _ => Err(Error::NoOptima(landscape.name().to_string())),
    }
}

fn correlations<T: Real>(acc: &CorrelationAccumulator<T>) -> Result<Vec<T>> {
    let r = acc.correlation()?;
    Ok((1..acc.columns()).map(|j| r[(0, j)]).collect())
}

/// Pearson correlation between cost and distance to the nearest optimum over
/// `sample_count` uniform random permutations drawn from `rng`.
pub fn fdc<T: Real>(landscape: &Landscape, measure: &Measure, sample_count: usize, rng: &mut RandomSource) -> Result<T> {
    let optima = optima(landscape)?;
    let measures = std::slice::from_ref(measure);
    let mut row = [T::zero(); 2];
    let mut acc: Option<CorrelationAccumulator<T>> = None;
    for _ in 0..sample_count {
        let q = Permutation::random(landscape.n(), rng)?;
        observation(landscape, optima, measures, &q, &mut row)?;
        acc.get_or_insert_with(|| CorrelationAccumulator::new(row.to_vec())).push(&row);
    }
    match acc {
        Some(acc) => Ok(correlations(&acc)?[0]),
        None => Err(Error::UndefinedCorrelation("no samples".into())),
    }
}

/// FDC of every measure on one shared sample set. Chunk `c` of the samples is
/// drawn from `RandomSource::new(seed).child(c)`, so the result is independent
/// of the number of worker threads.
pub fn fdc_table<T: Real>(landscape: &Landscape, measures: &[Measure], sample_count: usize, seed: u64) -> Result<Vec<T>> {
    let optima = optima(landscape)?;
    if sample_count < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two samples".into()));
    }
    let n = landscape.n();
    let width = measures.len() + 1;
    let root = RandomSource::new(seed);
    let mut pivot = vec![T::zero(); width];
    observation(landscape, optima, measures, &Permutation::random(n, &mut root.child(0))?, &mut pivot)?;
    let partials: Vec<CorrelationAccumulator<T>> = (0..sample_count.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut rng = root.child(c as u64);
            let mut acc = CorrelationAccumulator::new(pivot.clone());
            let mut row = vec![T::zero(); width];
            for _ in 0..CHUNK.min(sample_count - c * CHUNK) {
                let q = Permutation::random(n, &mut rng)?;
                observation(landscape, optima, measures, &q, &mut row)?;
                acc.push(&row);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let mut total = CorrelationAccumulator::new(pivot);
    partials.iter().for_each(|p| total.merge(p));
    correlations(&total)
}
