//! Pearson correlation, both as a direct two-pass kernel and as a streaming
//! accumulator over rows of a dataset.

use crate::error::{Error, Result};
use crate::scalar::{CompensatedSum, Real};

use super::matrix::Matrix;

/// Sample Pearson correlation of two equal-length vectors (two-pass).
pub fn pearson<T: Real>(x: &[T], y: &[T]) -> Result<T> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    if x.len() < 2 {
        return Err(Error::UndefinedCorrelation("fewer than two observations".into()));
    }
    let m = T::from_count(x.len());
    let mean = |v: &[T]| {
        let mut s = CompensatedSum::new();
        v.iter().for_each(|&a| s.add(a));
        s.value() / m
    };
    let (mx, my) = (mean(x), mean(y));
    let (mut sxx, mut syy, mut sxy) = (CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new());
    for (&a, &b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxx.add(dx * dx);
        syy.add(dy * dy);
        sxy.add(dx * dy);
    }
    let (sxx, syy) = (sxx.value(), syy.value());
    if sxx <= T::zero() || syy <= T::zero() {
        return Err(Error::UndefinedCorrelation("constant vector".into()));
    }
    Ok(clamp_unit(sxy.value() / (sxx * syy).sqrt()))
}

fn clamp_unit<T: Real>(r: T) -> T {
    r.max(-T::one()).min(T::one())
}

/// Single-pass accumulator of column sums and cross products.
///
/// Values are shifted by a fixed pivot row before accumulation, which keeps
/// the sums small relative to the spread of the data, and every sum is
/// Neumaier-compensated. Accumulators with the same pivot merge exactly.
#[derive(Debug, Clone)]
pub struct CorrelationAccumulator<T> {
    shift: Vec<T>,
    count: usize,
    sums: Vec<CompensatedSum<T>>,
    // lower triangle including the diagonal, row-major
    cross: Vec<CompensatedSum<T>>,
}

impl<T: Real> CorrelationAccumulator<T> {
    pub fn new(shift: Vec<T>) -> Self {
        let k = shift.len();
        Self {
            shift,
            count: 0,
            sums: vec![CompensatedSum::new(); k],
            cross: vec![CompensatedSum::new(); k * (k + 1) / 2],
        }
    }

    pub fn columns(&self) -> usize {
        self.shift.len()
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Panics if `row` has the wrong width.
    #[inline]
    pub fn push(&mut self, row: &[T]) {
        let k = self.shift.len();
        assert_eq!(row.len(), k, "row width");
        let mut centered = [T::zero(); 32];
        let mut heap;
        let c: &mut [T] = if k <= centered.len() {
            &mut centered[..k]
        } else {
            heap = vec![T::zero(); k];
            &mut heap
        };
        for j in 0..k {
            c[j] = row[j] - self.shift[j];
            self.sums[j].add(c[j]);
        }
        let mut idx = 0;
        for i in 0..k {
            for j in 0..=i {
                self.cross[idx].add(c[i] * c[j]);
                idx += 1;
            }
        }
        self.count += 1;
    }

    /// Panics if the pivots differ.
    pub fn merge(&mut self, other: &Self) {
        assert_eq!(self.shift, other.shift, "accumulators must share a pivot row");
        self.count += other.count;
        self.sums.iter_mut().zip(&other.sums).for_each(|(a, b)| a.merge(b));
        self.cross.iter_mut().zip(&other.cross).for_each(|(a, b)| a.merge(b));
    }

    pub fn means(&self) -> Vec<T> {
        let m = T::from_count(self.count);
        self.sums.iter().zip(&self.shift).map(|(s, &c)| s.value() / m + c).collect()
    }

    /// Pearson correlation matrix of the accumulated columns; unit diagonal.
    pub fn correlation(&self) -> Result<Matrix<T>> {
        let k = self.columns();
        if self.count < 2 {
            return Err(Error::UndefinedCorrelation("fewer than two observations".into()));
        }
        let m = T::from_count(self.count);
        let tri = |i: usize, j: usize| {
            let (i, j) = if i >= j { (i, j) } else { (j, i) };
            self.cross[i * (i + 1) / 2 + j].value()
        };
        let comoment = |i: usize, j: usize| tri(i, j) - self.sums[i].value() * self.sums[j].value() / m;
        let var: Vec<T> = (0..k).map(|i| comoment(i, i)).collect();
        if let Some(j) = var.iter().position(|&v| v <= T::zero()) {
            return Err(Error::UndefinedCorrelation(format!("column {j} is constant")));
        }
        let mut r = Matrix::identity(k);
        for i in 0..k {
            for j in 0..i {
                let v = clamp_unit(comoment(i, j) / (var[i] * var[j]).sqrt());
                r[(i, j)] = v;
                r[(j, i)] = v;
            }
        }
        Ok(r)
    }
}
