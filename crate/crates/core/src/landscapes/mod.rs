//! Benchmark landscapes: cost functions over permutations, with their optimal
//! permutations when those are known.

mod config;
mod tour;

pub use config::{LandscapeSpec, PRESET_NAMES};
pub use tour::{circle_asymmetric_matrix, circle_matrix, DistanceMatrix};

use crate::distances::{DistanceKind, Measure};
use crate::error::{Error, Result};
use crate::permutation::{check_lengths, Permutation};
use crate::rng::{mix64, RandomSource};

#[derive(Debug, Clone)]
enum Objective {
    Tour(DistanceMatrix),
    Haystack { target: Permutation, measure: Measure },
    NoisyHaystack { target: Permutation, measure: Measure, noise_seed: u64 },
}

/// A cost function over permutations of a fixed length.
#[derive(Debug, Clone)]
pub struct Landscape {
    name: String,
    n: usize,
    objective: Objective,
    optima: Option<Vec<Permutation>>,
}

impl Landscape {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Known optimal permutations, if any.
    pub fn optima(&self) -> Option<&[Permutation]> {
        self.optima.as_deref()
    }

    pub fn cost(&self, p: &Permutation) -> Result<f64> {
        if p.len() != self.n {
            return Err(Error::LengthMismatch { left: self.n, right: p.len() });
        }
        match &self.objective {
            Objective::Tour(m) => Ok(m.tour_cost(p.as_slice())),
            Objective::Haystack { target, measure } => measure.evaluate(target, p),
            Objective::NoisyHaystack { target, measure, noise_seed } => {
                Ok(noise_factor(*noise_seed, p) * measure.evaluate(target, p)?)
            }
        }
    }
}

/// Multiplier in `[1, 1.5)` determined by `(seed, p)`.
pub(crate) fn noise_factor(seed: u64, p: &Permutation) -> f64 {
    let mut h = mix64(seed ^ 0xA076_1D64_78BD_642F);
    for &e in p.iter() {
        h = mix64(h ^ e as u64);
    }
    let unit = (h >> 11) as f64 / (1u64 << 53) as f64;
    1.0 + 0.5 * unit
}

fn check_cities(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::TooShort { what: "tour landscape", min: 3, len: n });
    }
    Ok(())
}

/// Cities equally spaced on the unit circle, Euclidean edges. The `2n`
/// optima are the rotations of the tour in either direction.
pub fn circle_tsp(n_cities: usize) -> Result<Landscape> {
    check_cities(n_cities)?;
    Ok(Landscape {
        name: "circle-tsp".into(),
        n: n_cities,
        objective: Objective::Tour(circle_matrix(n_cities)),
        optima: Some(tour::circle_tours(n_cities, true)),
    })
}

/// Circle cities where only counterclockwise moves are cheap; the `n`
/// optima are the rotations of the counterclockwise tour.
pub fn circle_atsp(n_cities: usize) -> Result<Landscape> {
    check_cities(n_cities)?;
    Ok(Landscape {
        name: "circle-atsp".into(),
        n: n_cities,
        objective: Objective::Tour(circle_asymmetric_matrix(n_cities)),
        optima: Some(tour::circle_tours(n_cities, false)),
    })
}

/// Tour landscape over a random distance matrix; optima unknown.
pub fn random_matrix_tsp(n_cities: usize, symmetric: bool, rng: &mut RandomSource) -> Result<Landscape> {
    check_cities(n_cities)?;
    let name = if symmetric { "random-tsp" } else { "random-atsp" };
    Ok(Landscape {
        name: name.into(),
        n: n_cities,
        objective: Objective::Tour(DistanceMatrix::random(n_cities, symmetric, rng)),
        optima: None,
    })
}

/// Cost is the distance to `target`. For pseudo-metrics the optima are the
/// whole zero-distance class of the target.
pub fn haystack(n: usize, target: &Permutation, measure: Measure) -> Result<Landscape> {
    check_target(n, target)?;
    let optima = measure.zero_class(target);
    Ok(Landscape {
        name: format!("haystack-{}", measure.name()),
        n,
        objective: Objective::Haystack { target: target.clone(), measure },
        optima: Some(optima),
    })
}

/// Cost is `α_q · δ(target, q)` with `α_q ∈ [1, 1.5)` a fixed pseudo-random
/// function of `(noise_seed, q)`.
pub fn noisy_haystack(n: usize, target: &Permutation, measure: Measure, noise_seed: u64) -> Result<Landscape> {
    check_target(n, target)?;
    let optima = measure.zero_class(target);
    Ok(Landscape {
        name: format!("noisy-haystack-{}", measure.name()),
        n,
        objective: Objective::NoisyHaystack { target: target.clone(), measure, noise_seed },
        optima: Some(optima),
    })
}

fn check_target(n: usize, target: &Permutation) -> Result<()> {
    check_lengths(&Permutation::identity(n.max(1)), target)
}

impl Landscape {
    /// Whether the optima set is exactly the single target (metric haystacks).
    pub fn has_unique_optimum(&self) -> bool {
        match &self.objective {
            Objective::Haystack { measure, .. } | Objective::NoisyHaystack { measure, .. } => {
                measure.kind() != DistanceKind::PseudoMetric
            }
            Objective::Tour(_) => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn circle_tsp_optimum() {
        let l1 = circle_tsp(20).unwrap();
        let expected = 20.0 * 2.0 * (PI / 20.0).sin();
        assert!((l1.cost(&Permutation::identity(20)).unwrap() - expected).abs() < 1e-12);
        assert!((expected - 6.2574).abs() < 1e-4);
        assert_eq!(l1.optima().unwrap().len(), 40);
        for opt in l1.optima().unwrap() {
            assert!((l1.cost(opt).unwrap() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn circle_tsp_invariances() {
        let l = circle_tsp(9).unwrap();
        let q = p(&[3, 1, 8, 0, 5, 2, 7, 4, 6]);
        let c = l.cost(&q).unwrap();
        for k in 0..9 {
            assert!((l.cost(&q.rotated(k)).unwrap() - c).abs() < 1e-12);
            assert!((l.cost(&q.rotated(k).reversed()).unwrap() - c).abs() < 1e-12);
        }
    }

    #[test]
    fn circle_atsp_optimum() {
        let l2 = circle_atsp(20).unwrap();
        assert_eq!(l2.optima().unwrap().len(), 20);
        let expected = 19.0 * 2.0 * (PI / 20.0).sin() + 2.0;
        for opt in l2.optima().unwrap() {
            assert!((l2.cost(opt).unwrap() - expected).abs() < 1e-12);
        }
        let id = Permutation::identity(20);
        assert!(l2.cost(&id.reversed()).unwrap() > l2.cost(&id).unwrap());
        let q = p(&[4, 0, 2, 1, 3]);
        let small = circle_atsp(5).unwrap();
        for k in 0..5 {
            assert!((small.cost(&q.rotated(k)).unwrap() - small.cost(&q).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn tour_landscapes_need_three_cities() {
        assert!(circle_tsp(2).is_err());
        assert!(circle_atsp(2).is_err());
        assert!(random_matrix_tsp(2, true, &mut RandomSource::new(1)).is_err());
    }

    #[test]
    fn random_matrix_symmetry() {
        let mut rng = RandomSource::new(3);
        let sym = random_matrix_tsp(12, true, &mut rng).unwrap();
        let asym = random_matrix_tsp(12, false, &mut rng).unwrap();
        let q = Permutation::random(12, &mut rng).unwrap();
        assert!((sym.cost(&q).unwrap() - sym.cost(&q.reversed()).unwrap()).abs() < 1e-12);
        for k in 0..12 {
            assert!((asym.cost(&q.rotated(k)).unwrap() - asym.cost(&q).unwrap()).abs() < 1e-12);
        }
        assert!(sym.optima().is_none());
        let differs = (0..20).any(|_| {
            let q = Permutation::random(12, &mut rng).unwrap();
            (asym.cost(&q).unwrap() - asym.cost(&q.reversed()).unwrap()).abs() > 1e-9
        });
        assert!(differs);
    }

    #[test]
    fn haystack_examples() {
        let target = p(&[2, 0, 3, 1, 4]);
        let em = haystack(5, &target, Measure::ExactMatch).unwrap();
        assert_eq!(em.cost(&target).unwrap(), 0.0);
        assert_eq!(em.cost(&target.rotated(1)).unwrap(), 5.0);
        assert!(em.has_unique_optimum());
        let id = Permutation::identity(6);
        let kt = haystack(6, &id, Measure::KendallTau).unwrap();
        assert_eq!(kt.cost(&id.reversed()).unwrap(), 15.0);
        let ce = haystack(5, &target, Measure::CyclicEdge).unwrap();
        assert_eq!(ce.optima().unwrap().len(), 10);
        assert!(!ce.has_unique_optimum());
        assert!(haystack(4, &target, Measure::Lee).is_err());
    }

    #[test]
    fn noisy_haystack_bounds_and_determinism() {
        let mut rng = RandomSource::new(17);
        let target = Permutation::random(10, &mut rng).unwrap();
        let l = noisy_haystack(10, &target, Measure::ExactMatch, 99).unwrap();
        assert_eq!(l.cost(&target).unwrap(), 0.0);
        for _ in 0..1000 {
            let q = Permutation::random(10, &mut rng).unwrap();
            let d = crate::distances::exact_match(&target, &q).unwrap() as f64;
            let c = l.cost(&q).unwrap();
            assert_eq!(c, l.cost(&q).unwrap());
            if d > 0.0 {
                assert!(d <= c && c < 1.5 * d);
            }
        }
    }

    #[test]
    fn noise_factor_is_roughly_uniform() {
        let mut rng = RandomSource::new(8);
        let samples: Vec<f64> =
            (0..20_000).map(|_| noise_factor(5, &Permutation::random(12, &mut rng).unwrap())).collect();
        let mean = samples.iter().sum::<f64>() / samples.len() as f64;
        assert!((mean - 1.25).abs() < 0.005);
        assert!(samples.iter().all(|&a| (1.0..1.5).contains(&a)));
    }
}
