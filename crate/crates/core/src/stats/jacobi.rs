//! Cyclic Jacobi eigendecomposition and principal components of a
//! correlation matrix.

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::matrix::Matrix;

pub const SYMMETRY_TOLERANCE: f64 = 1e-12;
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 100;

/// Eigen-structure of a correlation matrix, components sorted by decreasing eigenvalue.
#[derive(Debug, Clone)]
pub struct PcaResult<T> {
    pub correlation_matrix: Matrix<T>,
    pub eigenvalues: Vec<T>,
    /// Column `j` is the unit eigenvector of `eigenvalues[j]`; its largest-magnitude entry is positive.
    pub eigenvectors: Matrix<T>,
    pub proportions: Vec<T>,
    pub cumulative: Vec<T>,
    /// `loadings[(i, j)]` is the correlation of variable `i` with component `j`.
    pub loadings: Matrix<T>,
    pub sweeps: usize,
}

/// Eigenvalues and eigenvectors of a symmetric matrix by cyclic-by-row Jacobi
/// rotations, packaged as principal components.
pub fn jacobi_eigen<T: Real>(matrix: &Matrix<T>) -> Result<PcaResult<T>> {
    if let Some((row, col)) = matrix.asymmetry(T::lit(SYMMETRY_TOLERANCE)) {
        return Err(Error::Asymmetric { row, col });
    }
    let k = matrix.dim();
    let mut a = matrix.clone();
    let mut v = Matrix::<T>::identity(k);
    let tol = T::lit(OFF_DIAGONAL_TOLERANCE);
    let two = T::lit(2.0);

    let mut sweeps = 0;
    loop {
        let off = (0..k)
            .flat_map(|p| (p + 1..k).map(move |q| (p, q)))
            .map(|(p, q)| a[(p, q)].abs())
            .fold(T::zero(), T::max);
        if off < tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..k {
            for q in p + 1..k {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                // once an element is negligible next to both diagonal entries, drop it
                let g = T::lit(100.0) * apq.abs();
                if sweeps > 4 && a[(p, p)].abs() + g == a[(p, p)].abs() && a[(q, q)].abs() + g == a[(q, q)].abs() {
                    a[(p, q)] = T::zero();
                    a[(q, p)] = T::zero();
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                // A <- J^T A J, V <- V J
                for r in 0..k {
                    let (arp, arq) = (a[(r, p)], a[(r, q)]);
                    a[(r, p)] = c * arp - s * arq;
                    a[(r, q)] = s * arp + c * arq;
                }
                for r in 0..k {
                    let (apr, aqr) = (a[(p, r)], a[(q, r)]);
                    a[(p, r)] = c * apr - s * aqr;
                    a[(q, r)] = s * apr + c * aqr;
                }
                a[(p, q)] = T::zero();
                a[(q, p)] = T::zero();
                for r in 0..k {
                    let (vrp, vrq) = (v[(r, p)], v[(r, q)]);
                    v[(r, p)] = c * vrp - s * vrq;
                    v[(r, q)] = s * vrp + c * vrq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| a[(j, j)].partial_cmp(&a[(i, i)]).expect("finite eigenvalues"));
    let eigenvalues: Vec<T> = order.iter().map(|&i| a[(i, i)]).collect();
    let mut eigenvectors = Matrix::zeros(k);
    for (col, &src) in order.iter().enumerate() {
        let vec = v.column(src);
        let pivot = vec.iter().copied().fold(T::zero(), |m, x| if x.abs() > m.abs() { x } else { m });
        let sign = if pivot < T::zero() { -T::one() } else { T::one() };
        for (row, x) in vec.into_iter().enumerate() {
            eigenvectors[(row, col)] = sign * x;
        }
    }

    let total: T = eigenvalues.iter().copied().sum();
    let proportions: Vec<T> = eigenvalues.iter().map(|&l| l / total).collect();
    let cumulative = proportions
        .iter()
        .scan(T::zero(), |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    let mut loadings = Matrix::zeros(k);
    for j in 0..k {
        let scale = eigenvalues[j].max(T::zero()).sqrt();
        for i in 0..k {
            loadings[(i, j)] = eigenvectors[(i, j)] * scale;
        }
    }

    Ok(PcaResult {
        correlation_matrix: matrix.clone(),
        eigenvalues,
        eigenvectors,
        proportions,
        cumulative,
        loadings,
        sweeps,
    })
}

impl<T: Real> PcaResult<T> {
    /// `V diag(λ) Vᵀ`, which should reproduce the input matrix.
    pub fn reconstruct(&self) -> Matrix<T> {
        let k = self.eigenvalues.len();
        let mut scaled = self.eigenvectors.clone();
        for i in 0..k {
            for j in 0..k {
                scaled[(i, j)] *= self.eigenvalues[j];
            }
        }
        scaled.mul(&self.eigenvectors.transpose())
    }
}
