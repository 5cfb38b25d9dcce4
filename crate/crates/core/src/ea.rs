//! Mutation-only generational evolutionary algorithm with stochastic
//! universal sampling and single-member elitism.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::landscapes::Landscape;
use crate::mutation::MutationOperator;
use crate::permutation::Permutation;
use crate::rng::RandomSource;

pub const DEFAULT_POPULATION: usize = 100;

/// Maps a non-negative cost to a fitness in `(0, 1]`.
pub fn fitness(cost: f64) -> Result<f64> {
    if !(cost >= 0.0) {
        return Err(Error::NegativeFitnessCost(cost));
    }
    Ok(1.0 / (1.0 + cost))
}

/// Stochastic universal sampling: `count` equally spaced pointers with one
/// uniform offset, laid over the cumulative fitness wheel.
pub fn sus_select(fitnesses: &[f64], count: usize, rng: &mut RandomSource) -> Result<Vec<usize>> {
    if fitnesses.is_empty() {
        return Err(Error::InvalidParameter("selection needs at least one fitness value".into()));
    }
    if count == 0 {
        return Err(Error::InvalidParameter("selection count must be positive".into()));
    }
    if let Some(bad) = fitnesses.iter().find(|f| !(**f > 0.0 && f.is_finite())) {
        return Err(Error::InvalidParameter(format!("fitness values must be positive and finite, got {bad}")));
    }
    let total: f64 = fitnesses.iter().sum();
    let step = total / count as f64;
    let offset = rng.unit() * step;
    let mut chosen = Vec::with_capacity(count);
    let mut index = 0;
    let mut cumulative = fitnesses[0];
    for k in 0..count {
        let pointer = offset + k as f64 * step;
        while pointer >= cumulative && index + 1 < fitnesses.len() {
            index += 1;
            cumulative += fitnesses[index];
        }
        chosen.push(index);
    }
    Ok(chosen)
}

/// Checkpoints `1, 2, 5, 10, 20, 50, ...` up to and including `generations`.
pub fn default_checkpoints(generations: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut decade = 1usize;
    'outer: loop {
        for m in [1, 2, 5] {
            let g = decade.saturating_mul(m);
            if g >= generations {
                break 'outer;
            }
            out.push(g);
        }
        decade = decade.saturating_mul(10);
    }
    if generations > 0 {
        out.push(generations);
    }
    out
}

#[derive(Debug, Clone)]
pub struct EaConfig<'a> {
    pub population_size: usize,
    pub generations: usize,
    pub operator: MutationOperator,
    pub landscape: &'a Landscape,
    pub seed: u64,
    /// Generations after which statistics are recorded; sorted, each ≤ `generations`.
    pub checkpoints: Vec<usize>,
}

impl<'a> EaConfig<'a> {
    /// Default population and checkpoint schedule.
    pub fn new(landscape: &'a Landscape, operator: MutationOperator, generations: usize, seed: u64) -> Self {
        EaConfig {
            population_size: DEFAULT_POPULATION,
            generations,
            operator,
            landscape,
            seed,
            checkpoints: default_checkpoints(generations),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.population_size < 2 {
            return Err(Error::InvalidParameter(format!(
                "population size must be at least 2, got {}",
                self.population_size
            )));
        }
        if self.generations == 0 {
            return Err(Error::InvalidParameter("generations must be positive".into()));
        }
        if let Some(&g) = self.checkpoints.iter().find(|&&g| g > self.generations) {
            return Err(Error::InvalidParameter(format!(
                "checkpoint {g} exceeds the {} generations",
                self.generations
            )));
        }
        if self.checkpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("checkpoints must be strictly increasing".into()));
        }
        self.operator.validate()?;
        let n = self.landscape.n();
        if n < self.operator.min_len() {
            return Err(Error::TooShort { what: self.operator.name(), min: self.operator.min_len(), len: n });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckpointRecord {
    pub generation: usize,
    pub best_cost: f64,
    pub mean_cost: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunTrace {
    pub records: Vec<CheckpointRecord>,
}

impl RunTrace {
    pub fn final_best(&self) -> Option<f64> {
        self.records.last().map(|r| r.best_cost)
    }
}

fn evaluate(landscape: &Landscape, population: &[Permutation]) -> Result<Vec<f64>> {
    population.iter().map(|p| landscape.cost(p)).collect()
}

/// Index of the lowest cost, earliest index on ties.
fn elite_index(costs: &[f64]) -> usize {
    let mut best = 0;
    for (i, &c) in costs.iter().enumerate().skip(1) {
        if c < costs[best] {
            best = i;
        }
    }
    best
}

/// Runs one EA. Generation 0 is the random initial population; checkpoint
/// `g` is recorded once `g` generations of replacement have completed.
pub fn run(config: &EaConfig<'_>) -> Result<RunTrace> {
    config.validate()?;
    let landscape = config.landscape;
    let n = landscape.n();
    let mut rng = RandomSource::new(config.seed);
    let mut population = (0..config.population_size)
        .map(|_| Permutation::random(n, &mut rng))
        .collect::<Result<Vec<_>>>()?;
    let mut costs = evaluate(landscape, &population)?;
    let mut best = costs[elite_index(&costs)];
    let mut trace = RunTrace { records: Vec::with_capacity(config.checkpoints.len()) };
    let mut next_checkpoint = config.checkpoints.iter().peekable();
    while next_checkpoint.peek() == Some(&&0) {
        next_checkpoint.next();
        trace.records.push(record(0, best, &costs));
    }
    let mut fitnesses = vec![0.0; config.population_size];

    for generation in 1..=config.generations {
        let elite = elite_index(&costs);
        for (f, &c) in fitnesses.iter_mut().zip(&costs) {
            *f = fitness(c)?;
        }
        let parents = sus_select(&fitnesses, config.population_size - 1, &mut rng)?;
        let mut next = Vec::with_capacity(config.population_size);
        let mut next_costs = Vec::with_capacity(config.population_size);
        next.push(population[elite].clone());
        next_costs.push(costs[elite]);
        for &parent in &parents {
            let mut child = population[parent].clone();
            config.operator.apply(&mut child, &mut rng)?;
            next_costs.push(landscape.cost(&child)?);
            next.push(child);
        }
        population = next;
        costs = next_costs;
        best = best.min(costs[elite_index(&costs)]);
        if next_checkpoint.peek() == Some(&&generation) {
            next_checkpoint.next();
            trace.records.push(record(generation, best, &costs));
        }
    }
    Ok(trace)
}

fn record(generation: usize, best_cost: f64, costs: &[f64]) -> CheckpointRecord {
    let mean_cost = costs.iter().sum::<f64>() / costs.len() as f64;
    CheckpointRecord { generation, best_cost, mean_cost }
}

/// Settings shared by every run of an operator comparison.
#[derive(Debug, Clone)]
pub struct CompareSettings {
    pub population_size: usize,
    pub generations: usize,
    pub runs: usize,
    pub instances: usize,
    pub seed: u64,
    pub checkpoints: Vec<usize>,
}

impl CompareSettings {
    pub fn new(generations: usize, runs: usize, instances: usize, seed: u64) -> Self {
        CompareSettings {
            population_size: DEFAULT_POPULATION,
            generations,
            runs,
            instances,
            seed,
            checkpoints: default_checkpoints(generations),
        }
    }
}

/// Mean convergence curves, one per operator.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub checkpoints: Vec<usize>,
    pub operators: Vec<MutationOperator>,
    /// `mean_best[o][c]`: best-so-far cost of operator `o` at checkpoint `c`,
    /// averaged over every instance and run.
    pub mean_best: Vec<Vec<f64>>,
}

impl Comparison {
    pub fn final_mean(&self, operator: usize) -> f64 {
        *self.mean_best[operator].last().expect("comparison has checkpoints")
    }

    pub fn final_mean_of(&self, name: &str) -> Option<f64> {
        self.operators.iter().position(|op| op.to_string() == name || op.name() == name).map(|i| self.final_mean(i))
    }
}

/// Runs every operator on the same `instances` landscapes with the same run
/// seeds, so operators differ only in their mutations.
///
/// Instance `i` is generated from `RandomSource::new(seed).child(i).child(0)`;
/// run `r` on it is seeded by `.child(i).child(r + 1)`. The result does not
/// depend on the number of worker threads.
pub fn compare<G>(operators: &[MutationOperator], generator: G, settings: &CompareSettings) -> Result<Comparison>
where
    G: Fn(&mut RandomSource) -> Result<Landscape> + Sync,
{
    if operators.is_empty() {
        return Err(Error::InvalidParameter("no mutation operators to compare".into()));
    }
    if settings.runs == 0 || settings.instances == 0 {
        return Err(Error::InvalidParameter("runs and instances must be positive".into()));
    }
    let root = RandomSource::new(settings.seed);
    let landscapes = (0..settings.instances)
        .into_par_iter()
        .map(|i| generator(&mut root.child(i as u64).child(0)))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<(usize, usize, usize)> = (0..operators.len())
        .flat_map(|o| (0..settings.instances).flat_map(move |i| (0..settings.runs).map(move |r| (o, i, r))))
        .collect();
    let traces = jobs
        .par_iter()
        .map(|&(o, i, r)| {
            let config = EaConfig {
                population_size: settings.population_size,
                generations: settings.generations,
                operator: operators[o],
                landscape: &landscapes[i],
                seed: root.child(i as u64).child(r as u64 + 1).seed(),
                checkpoints: settings.checkpoints.clone(),
            };
            run(&config)
        })
        .collect::<Result<Vec<_>>>()?;

    let per_operator = settings.instances * settings.runs;
    let mean_best = traces
        .chunks(per_operator)
        .map(|group| {
            (0..settings.checkpoints.len())
                .map(|c| group.iter().map(|t| t.records[c].best_cost).sum::<f64>() / per_operator as f64)
                .collect()
        })
        .collect();
    Ok(Comparison { checkpoints: settings.checkpoints.clone(), operators: operators.to_vec(), mean_best })
}
