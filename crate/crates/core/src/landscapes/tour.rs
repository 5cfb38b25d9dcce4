//! Travelling-salesperson cost functions.

use std::f64::consts::PI;

use crate::permutation::Permutation;
use crate::rng::RandomSource;

/// Edge costs between `n` cities, zero on the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
    symmetric: bool,
}

impl DistanceMatrix {
    /// Builds the matrix from `cost(i, j)` for `i != j`.
    pub fn from_fn(n: usize, symmetric: bool, mut cost: impl FnMut(usize, usize) -> f64) -> Self {
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                entries[i * n + j] = if symmetric && j < i { entries[j * n + i] } else { cost(i, j) };
            }
        }
        Self { n, entries, symmetric }
    }

    /// Entries drawn i.i.d. uniform on `[0, 1)`, mirrored when `symmetric`.
    pub fn random(n: usize, symmetric: bool, rng: &mut RandomSource) -> Self {
        Self::from_fn(n, symmetric, |_, _| rng.unit())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    #[inline]
    pub fn get(&self, from: usize, to: usize) -> f64 {
        self.entries[from * self.n + to]
    }

    /// Length of the closed tour visiting cities in the order of `tour`.
    #[inline]
    pub fn tour_cost(&self, tour: &[usize]) -> f64 {
        let n = tour.len();
        let mut total = self.get(tour[n - 1], tour[0]);
        for w in tour.windows(2) {
            total += self.get(w[0], w[1]);
        }
        total
    }
}

/// Chord length between cities `i` and `j` of `n` equally spaced on the unit circle.
pub(crate) fn chord(n: usize, i: usize, j: usize) -> f64 {
    2.0 * (PI * i.abs_diff(j) as f64 / n as f64).sin()
}

/// Euclidean edge costs for cities on the unit circle.
pub fn circle_matrix(n: usize) -> DistanceMatrix {
    DistanceMatrix::from_fn(n, true, |i, j| chord(n, i, j))
}

/// Counterclockwise moves cost their chord; any move to a lower-numbered city costs 2.0.
pub fn circle_asymmetric_matrix(n: usize) -> DistanceMatrix {
    DistanceMatrix::from_fn(n, false, |i, j| if i < j { chord(n, i, j) } else { 2.0 })
}

/// Every rotation of `0..n`, optionally together with every rotation of its reverse.
pub(crate) fn circle_tours(n: usize, both_directions: bool) -> Vec<Permutation> {
    let forward = Permutation::identity(n);
    let backward = forward.reversed();
    let mut tours: Vec<Permutation> = (0..n).map(|k| forward.rotated(k)).collect();
    if both_directions {
        tours.extend((0..n).map(|k| backward.rotated(k)));
    }
    tours
}
